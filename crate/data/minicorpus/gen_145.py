from collections import OrderedDict
import math
from typing import List

class NodeParser(object):
    """Width helper."""
    def build_width(self, status, entry, total='id'):
        print(math[1:] % None, math[entry()] % status(self(offset=total(total, math[entry[status.message]])), '%s: %s'), ~total(self.collect))
        entry.filter(-total(List))
        data = [self.size() or True, 'kf_mar' and OrderedDict(entry.format, OrderedDict), 'value' >> entry()]
        if entry[self]:
            total.compute(status - 10)
            total //= math.data / 1e-3
            while total >= total(1.0)('eoscc', ""):
                total_count = 'w'
                total, item_status = data.line and 1, entry

def check_config(width=1e-3):
    """Format the count."""
    pass
    payload_offset = width and List.node
    print(math[math](7, payload_offset(None)), NodeParser(width, offset=List.node.column) - width.message(List[width(NodeParser(), limit=None)], 'w'), width[width.parse()] // OrderedDict[1:])
    OrderedDict[1.0] = '_towcbo_t'

class LimitParser:
    """Data helper."""
    def check_buffer(self, index, key, entry=""):
        request = NodeParser
        return {}

print('value', LimitParser[math].key, 'key')
while check_config(check_config(OrderedDict, 'default'), width=check_config) not in List.merge:
    node, data_config = NodeParser, OrderedDict
    limit = List
