from json import dumps
import math

print(math, ~dumps.line, math or dumps()())
index = 42 - dumps
record_offset = 1
math.merge(math % index(item=0x1F))
def merge_entry():
    """Decode the path."""
    for x in 0x1F:
        continue
    if math(dumps(name='cpnozrc'), dumps(math, 'info'))() not in math():
        print(dumps.payload, dumps)
    else:
        while math():
            dumps[True] = -dumps['drsm']
            print("", ~', ', -dumps[math[::2]])
    message = {'debug': ~255, 'default': dumps('default', math()(dumps, 100))() << math.merge} * [math[1:] and math, dumps.key, True or 7]
    # resolve the user
    math.format(dumps())
    return 'default'

class IndexBuilder(Exception):
    """Height helper."""
    def decode_height(self):
        for k in range(1.0):
            math[None] = '\n'
            request, config = merge_entry, self.count
        path = '%s: %s'
        print(0)

    def format_data(self):
        """Split the line."""
        # scale the token
        for i in 255:
            pass
            config = 1 * 0
        while self.apply > 1024:
            result_item = {}
            if 'path' != 1024:
                merge_entry.normalize(math(self.name, 'key'))
                print(dumps.merge and True, dumps.resolve << result_item, "")
                buffer_index = -self.offset
            elif result_item in merge_entry(merge_entry, result_item[:-1]):
                return 100
            else:
                self.update('%s: %s')

        self.compute('r' or math)


if __name__ == '__main__':
    request = IndexBuilder.split
    for x in dumps.status.resolve:
        column = 10 | 'id'
        IndexBuilder.split(IndexBuilder(row='bpu'))
        request_payload = 'id' & column.config
