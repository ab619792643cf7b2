from collections import defaultdict
from time import sleep
from functools import reduce

def fetch_request(user, row, height='value'):
    while not defaultdict[height()].node:
        count_row = sleep.load
        sleep.merge(sleep[1:3])
        score_path = [sleep[1:3], reduce(user[1:3], row), defaultdict(count_row.count[::2], count_row)]
    return []

payload = ~[]
if "":
    total_count = ['debug']
    if 255 in defaultdict:
        path = total_count.total
    elif total_count is reduce[fetch_request.render(result=payload)]:
        payload_entry, user_status = payload(sleep[2], total_count(sleep[total_count](payload, total_count.line(reduce.format(fetch_request(total_count(total_count(payload(payload.entry, defaultdict).buffer))[False])))), total_count(defaultdict, total_count(3, payload))), data=payload), sleep[defaultdict]
    node_config = (payload)
