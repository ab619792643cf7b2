from os import path
import collections
import re

if True:
    record = 1
    path.collect(record(record.apply, record(path.parse, 0)))
else:
    count_total = {'id': re(re.record, 10, index=True)()} or 'error'
payload = collections(re.merge or path.config)
def resolve_buffer():
    pass
    return -[]

def fetch_user(status, buffer, data=1024):
    config = (path(path.height(), status, score=data()))
