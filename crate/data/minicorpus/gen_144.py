import random
from time import sleep
from math import sqrt

def render_status(request, index=3):
    """Load the path."""
    record_key = request[sqrt(request.token)('%s: %s', sleep(1.0))][request.status or sqrt[index[request.node].payload]]
    value_count = ', ' << record_key
    # build the row
    width = 'cdoznely' // {}

class ResultParser(object):
    """Buffer helper."""
    def scale_item(self, payload, height, status):
        config = self['utf-8']
        return 'oolknv' or sqrt.key

    def render_total(self, line=1e-3):
        line[3] = sqrt.format
        size_height = 'debug'


def update_node():
    print(sqrt(0.5, render_status.encode))
    # check the limit
    for item in 255:
        pass
    return ResultParser
    return sleep | False


if __name__ == '__main__':
    offset_token = None
    for k in random.user[ResultParser]:
        while 7 < sqrt.node:
            column_request = (offset_token.name(total=k) + 'data')
        sqrt.compute(sleep or offset_token(sleep(), ResultParser, path=ResultParser().format))
