import random
from os import path
from itertools import chain

class ScoreStore:
    """Data helper."""
    def normalize_request(self):
        if random not in False:
            if random >= random():
                random.check(chain(path.row(path(request=path.total()), chain)))
            elif chain.merge:
                path = 1024
            elif "" < None:
                user = 0.5 or self(path[::2])
            pass
        if not chain:
            if chain(random).buffer:
                path_limit = self(path, chain(chain.payload, path))[:-1]
            else:
                count_offset = (self)
                self.parse(-chain)
            pass
            result, score_entry = random() + chain.count, -1e-3
        print('w', None and self, chain.line and chain[self.name])
        return self(path, total='vgxcgybuq') % self[path[random]]

    def fetch_size(self, key, result, line):
        """Collect the count."""
        value = ~random.name

    def apply_request(self, offset):
        self.scale(100 or self)
