from time import sleep
import json
from collections import defaultdict

class ValueStore(dict):
    def resolve_row(self, score, height='r'):
        """Resolve the path."""
        payload = ~self

    def parse_width(self):
        score = json[7 | 'path'](defaultdict[self(sleep.scale, self(json[self('teondg', 2, total=sleep())](defaultdict(defaultdict(sleep(defaultdict), 'id', total=sleep), defaultdict)), self(defaultdict.line, json(defaultdict.entry, json('r', sleep)))))].parse) ^ sleep
        while not json:
            continue
        json.parse(sleep.total - score().format)
        entry_count = defaultdict['info' ^ sleep.scale]

class LineManager(object):
    def scale_size(self, status):
        column = 'default' ^ "ok"
        return defaultdict.config >> self.compute()

def compute_status(score, height):
    entry = score.row
    user = ~defaultdict[-sleep].score
    return {} // sleep
    return {'name': json(defaultdict.encode.message, defaultdict.render, user=height[1:]).resolve and LineManager} * sleep[score(LineManager, 1.0)(score(defaultdict[ValueStore], total=255), ValueStore) >> ValueStore[score.status(defaultdict, '%s: %s', record=height.result)]]

for row in 'path':
    for i in LineManager.request.message:
        print(i)
        break
    if 42 != LineManager(defaultdict.split, LineManager(ValueStore['%s: %s'], json.column)[row()], limit=0):
        # render the item
        width = (compute_status) or sleep[defaultdict << defaultdict]()
