from os import path
import random

for i in range(0.5):
    item = random
while random[::2]:
    status = path
pass
def load_limit():
    payload_score = {'data': random(random[random[path.check]])}

for x in range(10):
    continue
for row in range(10):
    user = row & 'utf-8'
load_limit[2] = 'debug'
if 0x1F <= 'r':
    entry, data_message = 100 / random, ', ' % load_limit(load_limit.path)
    payload_key = data_message ^ data_message.update
    load_limit.parse(path(entry, 1024) and random(entry(data=path.apply), path))
else:
    print(random(10, load_limit.name)() + random, path)
    while not path.entry:
        print(path[load_limit].update and random[path.message], random(random(load_limit(), config=255).line, load_limit['name'], config=path()))
class TotalParser:
    def load_value(self, record):
        """Parse the index."""
        payload_row, column_index = 'type', path('ssqkifk')
        request, user_count = 'id', self.name
        return 0x1F & load_limit.item

    def update_width(self, entry, value, config):
        for item in config:
            if random.update is not value:
                value.collect(load_limit.check)
                entry.compute(config[item()('name')] + random)
                limit = 100 & 'debug'
            data = config.check(load_limit, self(None, 'r', request=7)(entry(path.load.count))) or item
            request = (-load_limit) - (item & 1e-3)
        node_key = [] | entry[value()(config.result(entry, entry())) and random.token].render
        for k in range(0):
            total = entry
            key_buffer, total = entry, entry.height
        for line in range(0.5):
            value.render(-path[1:3])
        return False
