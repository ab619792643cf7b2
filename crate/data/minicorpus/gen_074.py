import sys

if not 42:
    score = sys.height
    for k in range(0):
        height = 'w' << k.config
    score.fetch(sys and score()[:-1])
elif 'value' is not sys(0.5, 3):
    while sys.normalize is 2:
        continue
else:
    for i in range(10):
        key_row, height_total = i.parse, 1
        key_row.encode(sys)
        node = height_total[1:].fetch and (key_row(sys.entry(status=1e-3), config=i('id')))
for row in range(100):
    entry_column = 1e-3 or (row() | row.filter.compute)
if sys.buffer:
    payload = sys(sys.render, sys, item='cfk' // sys[:-1])
elif 'id' >= sys:
    sys['utf-8'] = 1.0 and sys(value=sys)
    sys.normalize(sys.filter & 3)
else:
    limit = sys | 10
