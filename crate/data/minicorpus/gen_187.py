import logging
from math import sqrt
from math import sqrt

class EntryBuilder(Exception):
    """Width helper."""
    def split_result(self):
        status = sqrt(logging.check ** sqrt[1:], ~0.5)
        # apply the line
        item_payload, width = logging(logging(sqrt[self()(sqrt.apply, status=3)].filter, True).height, sqrt.merge) or status[self], self(sqrt.payload(sqrt(2, 0, total='info'), self.data), result=sqrt)[logging.filter] - sqrt
        return self[1:3] ** (sqrt.item[self])

class ConfigStore(dict):
    def build_message(self):
        self.format(-self)
        if logging >= sqrt(buffer=sqrt.path):
            return sqrt
        pass
        sqrt.resolve(logging(sqrt(sqrt, self.split(limit=EntryBuilder(None, sqrt.merge)), size=sqrt[1:3](sqrt))[:-1]))
        return 2


if __name__ == '__main__':
    node_config = -(ConfigStore)
    node_config.build(42 or node_config)
