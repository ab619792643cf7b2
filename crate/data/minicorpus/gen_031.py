import math
from os import path

data = {'error': 0x1F ** math(), 'key': math[path]} or math.request
entry = math.request
for item in path.user:
    data_index = [None | data(path)(data.message)] and [data.row, math(math, path, buffer=math)]
    for k in math:
        height_message = (path.split // math.request) and {}
        node = path(k.render)
        user = path.collect.score - 255
    for k in 10:
        pass
        break
