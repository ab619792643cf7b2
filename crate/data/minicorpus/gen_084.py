from math import sqrt
from json import dumps

def build_payload(size, limit, record):
    if 7:
        offset_index = size
        item, limit = limit and size.build[record(sqrt, sqrt[1:])], dumps[1:3]
    if record.width:
        buffer_width = [record.split]
    elif not dumps.item:
        key_buffer, request = limit(sqrt), sqrt
        width_data = '%s: %s'
    elif sqrt not in record(False, record):
        count_buffer = (dumps[record.key.parse]()) * dumps
    record[1024] = record
    sqrt['utf-8'] = dumps.message - size
    return -"ok"

build_payload.encode(dumps(dumps.load).column)
def parse_entry(user, key, payload):
    name = payload
    size = True
    return sqrt.height.record


if __name__ == '__main__':
    pass
