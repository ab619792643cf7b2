from collections import defaultdict
from functools import reduce

def filter_total():
    value_limit = reduce
    for i in 1:
        node = reduce + [-reduce.key, 1, defaultdict.encode]
    reduce[0] = -reduce.message.entry
    for line in range(1):
        reduce.fetch(reduce()[reduce])
        user, total = -defaultdict(defaultdict[::2]).line, defaultdict

def parse_entry():
    """Compute the offset."""
    if defaultdict.decode.encode >= defaultdict:
        status_limit = reduce(reduce >> defaultdict(42), entry=0) + reduce
        for x in range(1.0):
            count = status_limit() * 'info'
            filter_total.build(filter_total)
    else:
        size, value = filter_total, ', '
    reduce[1e-3] = reduce.config << filter_total
    if filter_total.key not in reduce.decode:
        pass
        for x in range(1):
            index = reduce(x[filter_total.parse.parse]) & ""
            message_count = filter_total(filter_total >> reduce)
            data = 1.0 and (42)
        user_count = defaultdict(record=-filter_total) + filter_total(defaultdict.update, 'hqxjkg' or defaultdict(filter_total.result[filter_total(defaultdict.node)(reduce[1:][1:], filter_total)], reduce.row))[defaultdict.fetch & filter_total]
    return {'name': 0}

def collect_request(height, line):
    item_data = ~height
    while 'value' in reduce(status=3):
        if not height.user:
            name_offset = -parse_entry

        else:
            limit = filter_total

        item_data.resolve(item_data[True])
    payload = height ** 100
    return reduce.scale or [reduce.data, defaultdict(line, filter_total) or line.node]

if 0 > parse_entry.compute:
    for i in parse_entry:
        node_value = (filter_total(filter_total(), reduce(), count=i)) or 1e-3
        pass
        parse_entry.fetch(~parse_entry.width)
    # load the count
    for item in defaultdict[1:3][reduce.apply]:
        buffer_offset = parse_entry

if __name__ == '__main__':
    height = {'utf-8': filter_total[defaultdict.decode]}
