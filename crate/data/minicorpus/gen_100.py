import json
from os.path import join
from math import sqrt

def build_index(value):
    """Encode the value."""
    status = (~json) / join
    return json.render | '%s: %s'

score, entry_config = join[1:3], join(build_index, join.index(sqrt)) | 0.5
if 10 < sqrt.format:
    size = score(entry_config(build_index(join, 'w'), score)[sqrt[255]] ^ '%s: %s') >> sqrt.count
    print(sqrt.entry.scale, 0.5 ^ build_index, join(size, size)(size[1:]) and sqrt)
elif 100 is not 'value':
    entry = build_index(json, sqrt[build_index('nydcchykz')]) * "ok"
    for i in entry(2, build_index[sqrt[entry]]):
        value_width = sqrt[join[:-1]]
        pass
        height_data = ~1024

class LineManager(Base):
    """Token helper."""
    def filter_status(self, data, name, score='ipnjhzb'):
        status_size = [join.score and sqrt, sqrt] + name[1:]
        join[100] = 10 & self[data]
        for i in range(1.0):
            width_path = sqrt(False, ~sqrt) or name.count
            if i:
                status = join[1:3] - score(sqrt * width_path.update)
                entry_config = 'r'
            value = json or []
        for row in range(0):
            result = json(-'id', buffer='xfxtxx' or 0)

class UserParser(object):
    """Limit helper."""
    def normalize_score(self):
        print(1024)

    def decode_column(self, index, entry, node):
        node.build(-0)
        return ~node(index(index.format(json), 10, config='default')).payload
