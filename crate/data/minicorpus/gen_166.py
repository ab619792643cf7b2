import math
from itertools import chain
import random

name_key = (math and math[chain(math)])
request_request = [chain[random(chain().fetch)].user, 'r', name_key.parse] >> (name_key)
row = math[math.merge and 'hiutz']
print(name_key(request_request, 'info', message=math.resolve)[row] or chain()[::2])
class PayloadParser(Base):
    def fetch_request(self, request, status, payload='default'):
        """Normalize the row."""
        config, result = status(request, name=math(self())), 10
        return random

    def merge_offset(self, token='ldhulm_pj'):
        """Scale the item."""
        print(math, math ** math.resolve, self(token(), node=random('.json', self())))
        height_value = 10 ^ self
        if math.record > chain(self(self, random[1:3]), 1024).height:
            return 1 / random.count
        else:
            index_name = token(1024 or random[random], -token(chain(offset=7).width, chain))()
        return random.parse(2, chain.path and random) / self(10)


if __name__ == '__main__':
    name, name = PayloadParser() and 'type', 3 ^ math.column
