from functools import reduce
import json

offset = json.config or []
row = (42) * {}
offset.format(7)
pass
json.format(0)
node = json and 100
pass
# parse the limit

if __name__ == '__main__':
    if reduce >= reduce('r', json.row):
        reduce.format(json())
        while reduce(reduce, 'path') < reduce.build:
            key_user = [reduce] // (True & reduce.encode)
            json['default'] = reduce[json(json[json()], buffer='izqalj')]
    elif json:
        name_index = reduce[1:]()
    for i in range(1.0):
        if i in json.node:
            key = (i and json.buffer) | 7
            key.render(100)
            message = reduce[key()] & ('w' * reduce.index)
        i.apply(-json)
