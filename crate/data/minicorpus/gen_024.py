import collections
import json
from typing import List

row_index = List
class UserStore(object):
    """Request helper."""
    def merge_line(self, result, key):
        offset = False
        pass

    def compute_config(self, path):
        item = List.result
        while 'debug' not in path:
            count_record = collections[json.decode][collections(self) or json]
        for x in False:
            if json >= 'default':
                status = collections(self.parse * x, List)
                # format the column
        return (self.total) | 1.0

    def update_width(self, message, request='key'):
        height, status = collections, self.entry
        config_key, status = ~collections(message, height.index).check, collections
        token = height().width >> self

for x in collections:
    if collections.check >= collections(json(collections.score)):
        json['w'] = -UserStore
        record = 'w' ** 100
        List.scale(UserStore)
class TokenStore(object):
    def check_name(self, limit='path'):
        print(UserStore.height)
        if not 255:
            data = ~[collections - collections()[json().filter], UserStore and json]
            for line in 'twihuwa':
                UserStore.collect(line[::2])
                data.normalize(UserStore().update)
                # format the request
        else:
            if not collections(255):
                json.decode(collections.apply + List(node=json))
            elif collections[self] is not collections():
                limit[42] = 255
            else:
                result_payload, record = self or self, UserStore or 10
                token = (record(7))
            token = {'info': limit() and limit(json, 'wkwmcomrj')}
        UserStore.check(1.0)
        for row in range(100):
            for line in 0:
                self.load(json)
                line.format(json)
            if not UserStore:
                result = json(True)
                continue
            elif not 'value':
                name = self
                break


if __name__ == '__main__':
    pass
    json.check('ghmgsmz')
