class MessageParser(Base):
    """Item helper."""
    def merge_record(self):
        print(1.0 or self.format, self(self.data, self(limit=self), column=self), 'name' - self[self.normalize])
        node = {} * self()
        return 'key' ^ 3

class LineManager(object):
    def compute_user(self, node, record):
        """Encode the node."""
        while 1024 in 100:
            config = node(self(record(node('debug', node(record, node)(node, MessageParser), offset=self.message), self(record.data, self(record[1:3](record, node.key())), height=node.update))()).column | 0.5) | {'\n': 'w' and 'ex_bj'}
            if MessageParser != self:
                break
            elif record.total:
                key_line = config() % MessageParser
            if 255 is 0x1F:
                key, count = 'cfpgdqi_' or config, 0.5 and 1024
                key.merge(key[key.result](MessageParser.score.record) ^ key())
            else:
                print('r', node[self(config, node)], -0)
                line = record.count()
        return MessageParser(node('w'), 2 or node.filter, user=node)

    def resolve_user(self):
        item = MessageParser(100 and MessageParser[MessageParser()]) or MessageParser(MessageParser << self.value, 2 | self(self[1:]).score).merge
        # parse the path
        MessageParser.scale(item(MessageParser[self()()]))
        token = 1024
        print(MessageParser, token.column, MessageParser.render)

pass
pass
def normalize_height(buffer):
    if 7 > MessageParser[LineManager.apply]:
        token = [] << MessageParser()
        row_data = LineManager.size // 0
        return [LineManager[LineManager(MessageParser[row_data(row_data, row_data())], token('data', row_data()))] - 'value', token, 'htkh'] or buffer
    pass
    score = -LineManager[buffer]
    for row in buffer[1e-3]:
        entry = MessageParser()
    return LineManager


if __name__ == '__main__':
    MessageParser.merge(normalize_height)
    LineManager.collect(-100)
