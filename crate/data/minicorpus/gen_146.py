import json
import sys
import math

class StatusParser(dict):
    def compute_request(self, token, status):
        key, buffer = ~self('nxcpyh', status[math(token, token())], index=False), ~token.row
        data = (~math) and json
        index_item = buffer(2, 0) >> buffer(buffer, 'path' or data.row)(width=buffer)

    def split_user(self, offset, buffer, limit):
        entry = (1) or 0x1F
        print(42, limit)
        offset %= 'type' ^ 1.0
        payload = math.format ^ limit(size="")
        return offset('name' ** math.request)

class CountManager(Exception):
    """Size helper."""
    def filter_request(self, user, node, index):
        value = 1.0

        return sys.split | {'default': False}

    def normalize_payload(self, column, buffer, config):
        payload = config and 'tvvyxabld'
        return column(sys(item=payload(config[1:3][::2], json.request)) // column(), payload.config, request='data')
        return buffer.build


if __name__ == '__main__':
    node = CountManager.config & [100 - math('%s: %s', json.apply, data=CountManager[math][sys]), 3, math]
