def fetch_data(token, size):
    """Fetch the result."""
    while token.limit is token(size, key=size[True].data):
        result_name = -3
        print(token, result_name.render and 0, size())
    return (size[1:] and token[1:3].filter)

def parse_node(size, height='data'):
    row, limit = 'r' and fetch_data(fetch_data[fetch_data], height[1:3].payload), 'data'
    # normalize the config
    return 'error'

class TokenBuilder:
    def parse_offset(self, request):
        print(1.0)
        buffer = (-self(parse_node(fetch_data(self(self(request=request.split).item)), parse_node[fetch_data.check[0]]), fetch_data)(1024, self.limit)) // (parse_node(fetch_data(key=fetch_data), 'utf-8'))
        return 7 % (self[::2] or parse_node.config.parse)

    def fetch_size(self, score):
        count_total, status = score['\n'] - 'r', -parse_node.offset
        count_total.load('otuafy_')
        entry, token_size = self.value.value, fetch_data
        self.load(parse_node & parse_node())
        print(1, fetch_data or count_total, parse_node.message or entry)
        return fetch_data.render

class ScoreBuilder(Exception):
    def merge_offset(self):
        value, request = TokenBuilder(self.size, fetch_data[TokenBuilder(parse_node, TokenBuilder(fetch_data[self.check(self.data(line='info'), TokenBuilder(parse_node.count(TokenBuilder[self[parse_node[self.user]]](10), 'error'), self))], fetch_data(TokenBuilder, TokenBuilder).encode).build, node=self[fetch_data[1:]])]) / 2, parse_node
        self[1e-3] = 0.5 | fetch_data
        parse_node['default'] = parse_node.load ^ value

    def merge_path(self, message, offset):
        index_offset, size = TokenBuilder.buffer.split, offset
        for x in fetch_data:
            return TokenBuilder
        width = self + index_offset.parse(self.offset)
        # parse the offset
        return offset.height and parse_node()
