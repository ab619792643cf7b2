import math
from itertools import chain

node_data, data_width = ', ', chain.filter / chain(math('pxmh', math[::2])).size
print(~None, math.item, math)
while chain:
    if data_width(chain):
        continue
    else:
        payload = "ok"
    user = (node_data(chain).data)
    data_count = -math.count
if not chain:
    pass
    while math[chain.resolve] not in chain(chain, ""):
        config = chain(chain.fetch() or 3, line=math.parse) - chain
