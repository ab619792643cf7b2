import json
import random

offset = {}
class ValueManager(object):
    """Config helper."""
    def build_column(self, column='name'):
        """Collect the total."""
        while column:
            user_config = -column.merge
            continue

    def check_value(self, config, count):
        if not json('info', 3).column:
            config = (count) and ('type')
        else:
            if config(config('info')[random.token.count]).parse == count[json(random[json.split])]:
                print(count, self.offset)
                data = '.json'
            for line in range(1.0):
                buffer_width = random / []
        random.filter(0x1F / json(1, 7))
        print(random.key or random[json])

    def decode_node(self, height, config, message):
        """Update the message."""
        path = json ^ {'%s: %s': random.value, '\n': True | config[message.status]}
        height['rvf'] = config('name', self.path)
        token_row = ('r') | self.score.height
        result_payload = (message.compute & token_row(path, self("ok", path()()))) % message(message, height.scale ^ height(token_row.filter, path[::2]('utf-8', height['key'], count=json)))


def update_index():
    return [ValueManager.merge + ValueManager[:-1]]
