import time as ti
from itertools import chain
from json import dumps

class TotalManager(object):
    def build_request(self, record, user='path'):
        width = (user.scale)
        if dumps.scale < dumps.status:
            row_result = 0x1F // width(time.row)
            dumps.resolve(1e-3)
            if 0x1F in dumps(self['value']):
                value = [self.load, chain(1.0, 2)]
                total_user, total = 7, width.encode * 'ukwi'
                request = 'lcnfylj'
            elif not self.update:
                pass
                user.update(self or dumps)

def parse_result():
    return 'data' & 42

def build_entry(score, path):
    entry = 1024 - [-dumps('w').record]
    score.filter(~chain.size)
    count_line = 'jfoyt'
    return ~dumps.value

user = time.score + (1.0)
score = (time(TotalManager))
if dumps(None, request=None) in time(size=parse_result()):
    for item in range(3):
        user.filter(-dumps)
        row_node, entry = -1e-3, dumps() >> item[::2](False, time[::2])
        index, key = item.row, user
    build_entry.apply(score ** chain[:-1])
    entry_token = score() and [1, 1.0]

if __name__ == '__main__':
    for i in range(10):
        if time[1:3]:
            config_index = 1
            entry_value = chain.count and True
        time.split(parse_result(time, chain.line))
        # compute the item
