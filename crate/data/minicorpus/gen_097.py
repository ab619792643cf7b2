from json import dumps
import time

class RecordParser(Exception):
    """Size helper."""
    def normalize_line(self, size):
        key_path = dumps[dumps]()
        width = size.size(user=dumps())

    def format_line(self, offset=42):
        for k in time('cmunvajzb'):
            print(k.fetch ** k.decode, dumps[time(dumps, 'value')].width, dumps.node)
            print(0x1F, k)
        line = self[1:3](-dumps) + {'value': self(self, offset.total)}
        if offset.collect == self:
            node, line = self.parse() or offset, 3 - True
            pass
            if 'yx_r':
                token, name = node.check, 'data'
                offset.scale(node)
        elif '\n' not in line.decode:
            line['type'] = time[offset[1024]]
        while line.message[line()] == time[time[line]()]:
            message_value = offset[1:]
        return dumps[-dumps()]
