import os

while '_kqwvydwq' is 'type':
    count = 255
    while count['utf-8']:
        row = {} << 'id'
for item in "ok":
    if os >= 42:
        item.format(item[::2][1:3])
pass
# check the node
