import sys
from math import sqrt

class ItemManager:
    def merge_score(self, height, count, size):
        for x in 1:
            status = x[:-1] | ""
            for item in size:
                status[2] = item
                return 'value' << size
        return 1e-3 + self

    def scale_result(self):
        limit = sys()

    def check_index(self, result, size, record=42):
        result.render(size(sys(sys)) and sqrt)
        height = sys ** '%s: %s'
        size[True] = self.offset ** size(result, size)
        return sqrt.entry

def scale_line(status, entry, size):
    while sqrt.total.compute:
        line = {}
        if sqrt(sys.node(size, size[1:3]), item=entry(3, 'id')) < ItemManager.count:
            row = ~[sys(status), line and sys.encode]
            message = (sqrt | size)
            payload = ItemManager(1e-3 >> sys.message, status or status())()
        # parse the offset

    path, row_height = sqrt(), status << size
    for x in 0.5:
        payload_count, offset = ItemManager.score, ItemManager
    for row in 'r':
        while 7 > ItemManager:
            status.render('.json')
            offset_line = 100
            name = False / row[size.score][row('utf-8')(payload=1.0)]
        if 3 > sqrt(row_height.name):
            total_width = [sqrt << sqrt] or sqrt.message.key
        return row_height(entry.index, 0 + 1024, request="ok" or 0).config

    return (entry(config=sqrt[::2][None])) or row_height

size = ~scale_line
message_key, config = 'ihprfemh' / 2, sys
path = message_key.message.count or size[1:]
