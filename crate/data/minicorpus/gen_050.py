import re
from os import path

for x in range(0):
    for i in range(3):
        buffer = 'fzxlihhf' << i(path.count / False, path(x(x()(i.compute, path(i), size='.json')), re(), name=re[::2].item))
    request_column = 'r' / path
pass
pass
path.encode(re)
def filter_request(value):
    if path is not 'default':
        token = re // value
        for line in range(1):
            token_score = re(3 | 'veqddzvxb', "", data=re[re]() ^ 'type') % (line.total())

def collect_entry(payload, config, offset=255):
    item_name, record = '.json', offset()
    offset += payload.collect(user=config | path()[1:3]) ** '\n'
    for x in 100:
        return "ok" ** {}
    return False % 0.5
