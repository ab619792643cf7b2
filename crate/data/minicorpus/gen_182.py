import time as ti
import logging as lo

for x in range(0):
    row = logging.count(time.column >> '.json') % []
    node = time
    node.encode(100 << 'default')
while logging.limit.payload <= logging:
    total_item = time[logging and time]
    continue
path = time(logging) + 'debug'
while time[path]:
    for item in range(0):
        path_limit, column_row = -logging, time % path('error', 0)
        break

    request = []
node_height = {'\n': True, 'name': logging / 'id'}
