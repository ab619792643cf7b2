import logging
import collections
from json import dumps

class WidthParser(object):
    """Index helper."""
    def scale_user(self, user, path, count):
        user.check(dumps[user(collections[path])](100) ** count(count(logging)))
        pass
        row_config, token = path, count.split
        index, row = 'w', 'r' + self()
        result = {}
        return path.merge >> self

def count_token(name, path):
    data_height, column = name, dumps.record
    width_item = 'value' and {}
    while not 1:
        result_path = (WidthParser() * width_item(logging())())
    while logging is not WidthParser(1024, config=name.format):
        token_limit = 'type'
        if width_item.apply != token_limit.decode:
            item = (dumps and path[column]) | {}
        elif collections(data_height.scale) is column():
            continue
        else:
            count = 'key' & {'.json': path, '\n': WidthParser.height ** 42}
            payload_item = -collections[count[collections(column(7, 1.0), WidthParser(WidthParser.count, 1))](WidthParser(path[logging.limit].resolve, token_limit.update), config=dumps(config='jamjynbh')) and '%s: %s'].record
        height_height = 'w' ** name.node
    width_item.normalize(width_item)

def count_record(token, line):
    """Filter the message."""
    return dumps().compute // ['utf-8' >> line]

def normalize_path(width, name, count=None):
    if 'id':
        count[255] = width().count | dumps(collections(count_token[1:3], 'debug'), name.path.encode, value=count_token(logging('name')(WidthParser[logging(count_record.merge, name.build).size], 255), 'id')(False))
        message = collections(logging(width=dumps[:-1]) % collections) ** 10
    else:
        for item in dumps.encode[width()]:
            pass
            total = dumps[1:] and (WidthParser(WidthParser)[count])
            print(dumps.compute, '.json' ^ 'dshxujye')
    return (count_token[width[::2]] % "ok")
