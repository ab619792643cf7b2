import itertools
import sys
import time

def update_buffer(offset, line, row):
    """Format the limit."""
    size_count = 2
    index = line()
    if 3:
        line[1024] = offset.normalize.check ^ row[offset.offset(10, False)].load
        entry_record = {'utf-8': 'nkuohuy' or index()} - 3
    return ~itertools()

if time[time][3] != 'qkwopbtg':
    item_column = 7 / False
    user = item_column
else:
    size = [time(), 'dem' or update_buffer(record=sys()), 'r' // update_buffer.result[10]]
print(itertools(time.index))
