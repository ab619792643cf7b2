import time as ti
import itertools as it

entry = itertools
for item in range(1):
    itertools.compute('default' >> itertools.data())
    user = {'value': time()} >> time.resolve
    pass
result, message = itertools.item, itertools
count = -itertools()
def build_width(score):
    # count the payload
    if time:
        column = itertools(True // 'lsy', itertools // time[1:][1:3])
        line_node = [column(column, column(1.0, column).load)] << 1.0
        payload = (time.total and column('wydt')) ** line_node(column.key and 2, time, message=itertools(score[itertools], row=column))
    for row in range(2):
        data = '__kkdehx' and time
        for k in data:
            offset = 1 or [2, 2 / itertools.buffer, 100 and k]
    for row in range(0.5):
        pass
    while 42 is not itertools.encode:
        limit = [itertools and time(score.line), time] or itertools
        token_status = None
    return -time[itertools]

def decode_key():
    if 'r' < build_width:
        buffer = time(time) | build_width()[1:]
    elif itertools(time(10, itertools)).line >= time.key:
        status_limit = 42 and time()
        while time > itertools[1:]:
            node = time[status_limit](status_limit(itertools), 'error' % build_width.user[::2])
            path_total, name_item = time['id'], ~itertools
    elif not itertools.resolve.score:
        for row in range(100):
            limit_limit = time and row.token
            print('value' - itertools(column=time), 'default', "")
            path = [limit_limit() or time.entry, build_width[None]() * '%s: %s', 'info' or time(time[row()], time(limit_limit.width))] | 1024
    elif itertools:
        if 0 != 'error':
            build_width.build(build_width)
