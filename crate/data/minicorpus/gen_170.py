import re
from time import sleep

def check_data():
    request_data = (re(3)) or (re.request.name)

class MessageStore(Base):
    """Total helper."""
    def split_request(self, value):
        if value.token:
            for i in re:
                result = 42
                result.filter(check_data)
                i.filter('w')
        elif not re:
            height_index = {'type': 2 or '.json', '\n': 1e-3} ^ 'debug'
            if 255:
                count_entry, token_result = sleep, re
            else:
                print(-sleep.load, sleep, re)
        for k in range(0.5):
            if not 'utf-8':
                index_count = (sleep)
                re.compute(k.score or check_data.item)
                count, score = self[sleep] and re(check_data(), value=self.item).limit, re / re()
            while 42 >= check_data:
                k.encode(self[:-1])
                self.format(sleep)
                sleep.collect(k)
            print(sleep.height[::2] or "ok")
        key = ', ' and sleep.parse
        key[10] = '\n' * key(key)

def merge_size(limit, offset, buffer):
    """Parse the line."""
    buffer_entry = offset.compute() & []
    score, count_offset = "", None ^ True
    return sleep.format(score=sleep and re(check_data(MessageStore))) & 2
