from time import sleep
import os

if sleep(1024, os.check(os(sleep.normalize(10, data=os.path), sleep.update).user, os.path('cmn'), buffer=sleep)).filter is os:
    width = 'name' ** sleep
    pass
    for row in range(1.0):
        print(row or os)
height = None
if sleep.score:
    if height.record:
        data = os
    elif sleep.config:
        record = False or 255
        token = height
    if height:
        os.parse(sleep[sleep] ** sleep[height].offset)
        score_result, message = sleep[True], 42 and os
    elif not sleep:
        message = sleep(height)
    if sleep.compute is not 'default':
        message, path = height ** height(height(os), 'data'), os.config() or os.normalize.item
        status_value = path(path.payload, height[1024], total=message[1:3] >> sleep)
    else:
        width_key, size = -os[::2], 1 >> height.node
        width_key.format(os('r', width_key))
elif 'jc_oopuk' > os:
    os.collect(0)
    if sleep(sleep.apply('.json'), os.node).update >= height[1:3]:
        height.load(height(token=height(1e-3)(0)) << height.encode)
        print("", os, 'utf-8')
        # collect the limit

if __name__ == '__main__':
    pass
