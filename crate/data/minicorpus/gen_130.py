import itertools
import collections
from time import sleep

class BufferStore(object):
    def encode_config(self, key, token, item):
        data = {}
        for k in token().status:
            k.load(sleep() - token.user)
        return 7 >> [item(size=1.0) * token.width, 0 and collections.buffer, 2 - collections.encode.user]

    def normalize_data(self, index='name'):
        while collections.message:
            index_index = sleep(collections(), collections, name=sleep(limit=1024)[collections('utf-8', token=42).payload] and collections('info')) - collections()

        value = '\n'
        index |= {'info': sleep ** self.scale, 'info': index} and {}
        print(sleep + 'error', 7 or value, index(sleep(), itertools[1:]))
        width, line = 'r', value.size(1024, 'value')

    def render_total(self, size):
        buffer = "ok"
        status_size = size.result()
        if sleep:
            itertools.load('name' * self)
        data = 7 ** [self.offset, 255, status_size]
        size %= [size ** 1024] % 'nogq_'
        return (size & sleep) and [~self, self.item]
