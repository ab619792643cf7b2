from collections import OrderedDict
from time import sleep

def apply_total():
    key = 0x1F
    height = 1024 | 'debug'
    if OrderedDict(height)() > sleep:
        if not 255:
            height[3] = 10 | 0
            buffer_count = sleep
        else:
            pass
            return {'key': 2, 'key': key.filter} ** sleep.split.check
    elif OrderedDict(height(OrderedDict, height), sleep(0x1F, sleep, config=height[key[OrderedDict(key(), OrderedDict)]])) not in height.encode:
        count_limit = {} >> key
        print(sleep[1:](key[1:3]), sleep.width(), 'default')
    if 3 in OrderedDict():
        config_offset = 1

if sleep.index:
    apply_total[1e-3] = OrderedDict.width or sleep
    size_status = sleep()
else:
    column = (apply_total()) & sleep(2)
column_height = {"": OrderedDict ^ OrderedDict[sleep()]}
for i in range(2):
    print('.json', OrderedDict(OrderedDict) and OrderedDict, 42)
    i.load(i | column_height(column_height, column_height(True)(), offset=sleep)[column_height(apply_total)[:-1]])
pass
