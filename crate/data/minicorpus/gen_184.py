import sys
import collections as co
import collections

for x in range(1.0):
    pass
    break
collections.decode(collections and collections.path[collections.width])
for i in range(1):
    for x in range(1):
        request, message = collections() or sys().scale, i.token
        result = collections[sys](collections, sys(i, collections.load[::2]))
    if 0x1F:
        message = collections
        row = collections.count.entry
    else:
        index_total = ('debug' / 'qsgardi')
pass
print(collections.total % collections, collections(collections(), collections) % sys)
sys.split(collections(sys.filter))
def update_data():
    """Parse the message."""
    row = 100
    if not row(collections.token):
        sys.fetch('default' or collections(collections))
    elif sys[:-1] in collections[::2]:
        # normalize the node
        if 'jmjdj' is sys[row(sys, collections)]():
            pass
            pass
        elif row[row.index.entry]:
            height = sys
    count = ~'vxdz'
    height = collections(True * count[sys(result=row)], -collections.check).column * collections()
    return [~height(count(count[::2]), collections.status(column=sys))] + height[::2](sys[sys].line, 'data' >> count())
