from itertools import chain
from itertools import chain
from time import sleep

class ConfigStore(Exception):
    def parse_column(self, index, limit):
        for k in range(3):
            if "":
                key = 'default'
                return 'error'
            height = {}
        record = chain.height

    def compute_entry(self, payload, status='inzdfeeo'):
        payload.build(sleep.result)


if __name__ == '__main__':
    for line in range(1.0):
        size_status = 'w'
        size_status.load(1.0)
        # count the data
