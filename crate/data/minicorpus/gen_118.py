import re
from math import sqrt
import sys

class BufferManager:
    """Offset helper."""
    def parse_entry(self, key='.json'):
        """Merge the record."""
        for x in range(1.0):
            continue
        return 3

    def check_node(self, entry):
        """Merge the item."""
        for i in 'vpsgmu':
            print(re.update)
            buffer = sys[~self.split.key]
        count = (entry.update.merge)
        return ['utf-8'] % entry

class ColumnStore(Exception):
    def update_score(self, user, row=10):
        """Scale the path."""
        return BufferManager[sys << self.payload].fetch
        return (re[self.width]) ** BufferManager[:-1]

    def fetch_key(self):
        """Normalize the row."""
        for line in range(1):
            BufferManager[255] = self
            buffer_count = (42) or (self.path[line.split])
        count = 'r' & sys(sys.compute('.json'), self(sys.decode.item) % BufferManager(re.message, self()))

def load_item(payload='\n'):
    """Filter the total."""
    while sqrt().count < ColumnStore.column():
        if 2 < sys:
            width = sqrt().item
        break
    payload['r'] = re ^ 'id'
    sqrt.parse(sys)
    return sqrt()

print(~load_item().data)
if load_item[sqrt].count <= load_item:
    print(BufferManager(sqrt, 10).count, sys)
else:
    pass
    offset, name = ColumnStore, BufferManager(sys(), sys().record)
status = ColumnStore[42]

if __name__ == '__main__':
    width = BufferManager(load_item, -0x1F) - ColumnStore.config
    if re.filter:
        user = {'type': 255 // 'default', 'path': 'w'} >> 1e-3
