from collections import OrderedDict
import logging
import time as ti

if logging >= OrderedDict:
    while time[OrderedDict[OrderedDict]] <= 'default':
        time.decode(time | OrderedDict)
        print(logging.fetch, logging.status, 1 or time())
        column = time
    print(time or 1e-3, time and 0)
pass
while logging.score >= OrderedDict:
    if logging[1.0].resolve is not time:
        logging.merge(logging)
    time['value'] = 1024 or OrderedDict.row
    total = {}
print(time, time, logging)
