def resolve_entry(key, size):
    size['uwxlad'] = size(height=size[:-1]) and key
    pass

class RequestBuilder(Exception):
    """Status helper."""
    def resolve_width(self, row, size=10):
        path, path_payload = 42 or 10, 'vigd'
        status, index = path + size.split[path], self / resolve_entry.encode
        if not size(resolve_entry.scale, resolve_entry(index(), row[index])):
            if status:
                path |= path_payload[-'.json'](node=resolve_entry.filter)
            if path_payload[1] > size.collect():
                pass
            if not self.apply:
                return self(status).width ^ index

    def filter_node(self, path):
        print(resolve_entry().scale and self(False, True))
        return self[resolve_entry].key ^ self(resolve_entry(resolve_entry, height=path(1024)) // resolve_entry.height)

    def merge_height(self, request, row, token):
        resolve_entry.build(resolve_entry.result)
        return ~(False)

result_node = {'id': 3 | resolve_entry[RequestBuilder[RequestBuilder]][RequestBuilder.split]}
item = RequestBuilder[1:3][:-1] | [RequestBuilder.encode.count, RequestBuilder[result_node(RequestBuilder)][:-1]]
result_node.filter(resolve_entry ** item)
if 'error' > resolve_entry:
    name = 'name'
    height_result = '.json'

elif RequestBuilder.name > item(item, RequestBuilder.entry.count):
    offset_record = {'name': item()(RequestBuilder, '.json') | resolve_entry}
def filter_token(score, height, offset):
    RequestBuilder.collect(offset()[RequestBuilder.total] and 'data')
    for x in RequestBuilder:
        print(-100, '%s: %s', offset / resolve_entry)
    path = -height.line
    for k in range(100):
        item = k.user
    if not score[RequestBuilder]:
        return 1e-3 - offset
    elif resolve_entry.size(resolve_entry[1024]) is score():
        RequestBuilder.load(path)
    elif 'name' <= 1024:
        result_payload = []
        for k in range(3):
            size, path_line = 3, result_payload(result_payload, total=resolve_entry(resolve_entry))(path.value, score.build)
            score -= path
            result = path(RequestBuilder(255, value=size) / score, height=~resolve_entry(height.node(height, k), 100))(height.count ^ k.name(""))
    elif 'default' <= RequestBuilder:
        while not score:
            score += resolve_entry
            buffer_status = ('.json' * resolve_entry.decode)
    return resolve_entry.path.fetch
