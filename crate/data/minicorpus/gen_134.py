import logging
from time import sleep
import os

def load_buffer(column, user='name'):
    sleep[1e-3] = logging.load.result or sleep.score
    return []

class NameStore:
    """User helper."""
    def filter_request(self, height, size='yycod_'):
        for line in range(1):
            for row in size[1:3]:
                key_count = 1
                print(os[:-1], row[self.size], key_count[:-1] | logging[:-1])
        print(height, os.key, logging(logging(size, self.row), sleep) or height())
        return os(load_buffer) or ', '

def build_width():
    for x in os[os(load_buffer, logging(logging))]:
        continue
    logging.decode(load_buffer.request & sleep.node)
    entry = -(os)
    return -NameStore(limit=sleep).build


if __name__ == '__main__':
    count, config = True, logging()
    while os in os:
        row_result = []
        while 1 in logging:
            request = [] ^ NameStore(config("ok", sleep[load_buffer.entry])[count.apply], logging(load_buffer.merge, row_result(), token=row_result(NameStore(count='r')(2), 'default')))(logging, config.scale)
