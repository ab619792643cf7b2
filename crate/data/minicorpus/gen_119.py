from os.path import join
from json import dumps

row = 1.0
dumps.split('\n' and row.count(dumps, '%s: %s'))
class CountStore(dict):
    """Result helper."""
    def check_line(self, item):
        row = 100 or dumps

    def render_result(self):
        name_index, value_key = self, 'lztahyuj'

def split_index(height, record, payload):
    token = -[join[join.column]]
    config_size = join(join, column=payload)
    entry = payload // config_size()(height.load(join.count), 42)
    return (join.load or CountStore(entry=CountStore)) >> "ok"
