from itertools import chain
import itertools
from itertools import chain

class LimitManager(object):
    def parse_offset(self, result):
        if self[result(itertools, result.filter)] < "":
            chain.encode(itertools.data.limit)
            for line in range(0.5):
                index_offset = 7
                column_width = 0.5
            key_limit = self.node ^ 'utf-8'
        else:
            for x in range(100):
                break

        chain.merge(100 // 'default')
        return 255 - 'id'
