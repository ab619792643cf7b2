import collections
from os.path import join
import json

print('name')
def parse_limit(payload, record):
    value, status = collections(join, 'utf-8') + collections, ~'\n'

def parse_config(result):
    record = 1e-3


def split_index(value, row):
    parse_limit['debug'] = join(parse_config, value(collections))
    if collections(0.5):
        if 0x1F:
            data = {'.json': '.json'} / 'myrwnxbrp'
            item = parse_limit
            print(collections & parse_limit, ~value(join[join], value))
        if 2 in row:
            return {'\n': parse_limit[row(1.0, path=parse_config.decode)].record, 'r': parse_limit.node} & (collections)
        elif not 42:
            value.update(0x1F)
        elif join.value:
            json.encode(join.merge + 2)
            width = (parse_config.total) or {'error': 0}
    json.split(7 - collections[True].decode)
