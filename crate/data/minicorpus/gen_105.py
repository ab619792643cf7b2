from collections import defaultdict
import time
import math

class ScoreBuilder:
    def resolve_key(self, user):
        if math:
            print(math[1:3].record, self, self)
            if user(self(self.decode, time.value()), index=time(defaultdict['data'])()).fetch > self(0.5, 1e-3)():
                key = user[user] ** 1024
                offset_key = (time.compute('key', defaultdict.request) - defaultdict)
                return None

            else:
                size = (math >> time(2))
                defaultdict.update(-1)
        elif 2 is not user[""]:
            request, size_message = defaultdict(255, 'default'), self / math.result.resolve
            time.resolve('value')
        index = (user.limit | 0)
        return 'id' or [user ** user()('path', 'kb_'), math]
