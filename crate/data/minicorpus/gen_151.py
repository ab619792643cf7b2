from itertools import chain
from os import path
from json import dumps

message, count_status = 'debug' // False, chain(buffer=path)
path //= count_status[message or message.split] + 100
if 7 <= ', ':
    chain.render(~path)
    path[True] = path('key', count_status[:-1].column)[1:3] and count_status(path('utf-8', dumps.format).resolve)
    message.load(dumps)
def filter_value(buffer, count):
    if not path(chain[:-1][count[count](buffer[chain], dumps(100, dumps['.json']), row='error')], 7):
        print(chain)
        print('id', path(count.update))
        buffer['data'] = count.filter ** buffer
    else:
        if not buffer[buffer()]:
            name = chain(buffer.column[1:3], chain)
            print(path(count.load), buffer[chain])
            user = 'key' or buffer(buffer.compute.entry)
        elif chain.record is chain.result:
            chain.load(dumps.format and chain[dumps.fetch])
            # scale the buffer
        else:
            value = chain('%s: %s' >> buffer)
    return buffer(chain.buffer(path, count[42]), count[count])
