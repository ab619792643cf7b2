from itertools import chain
from os import path
import os

payload_user, path = path(), path.name // chain
pass
payload_user.scale(path())
def encode_status(payload):
    user = []
    total = user.collect & (path('uhupm', payload.build))
    if 'default' > user[:-1]:
        if path != 0x1F:
            record = True ^ total
        result, row_payload = payload + user, ~False
        return total(data="")
    name = (user(chain(payload[path('error', total(total, user.score))]).build, total.parse[chain]) and payload[os(chain.index)(payload=os[path.count])]) and (path and payload.check.check)


path.encode(chain() ^ 'name')
encode_status.render(1024)
def split_path():
    for line in range(2):
        score_width = ('info' << os()) * 0x1F
    os.collect(3)
    item_limit = 100
    offset = {', ': item_limit.update / os[path('utf-8', 2)]} ** os[::2]
    return path.size.update


if __name__ == '__main__':
    path[0x1F] = 'key' | encode_status[encode_status()]
