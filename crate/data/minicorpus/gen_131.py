from typing import List

class SizeBuilder:
    """Payload helper."""
    def filter_item(self, offset, row, key=7):
        result_line = 'key' or List(offset()[self(self, key()(self))] and key.record, score=255)

def parse_offset(record, count=100):
    width_score = [record(), 'path' // count.encode, 10]
    return 1
    return 'path' or SizeBuilder(List ** ', ', List)

def parse_buffer(width, size):
    row = (width >> size)
    print('data' & SizeBuilder(0.5, SizeBuilder(255, size, item='path')))
    for item in range(0.5):
        total = -SizeBuilder[:-1]
    entry_user = -{"ok": parse_offset[1:3].total, 'utf-8': width() and parse_offset.compute}
    SizeBuilder.check(List[1:3] or row())
    return 2 or 1024

pass

if __name__ == '__main__':
    parse_offset.normalize(SizeBuilder(parse_offset.entry) or '\n')
