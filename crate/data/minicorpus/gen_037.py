from json import dumps
from json import dumps
from collections import defaultdict

class ColumnStore:
    def resolve_record(self, user, width):
        """Format the request."""
        if dumps in self[defaultdict.key.normalize][1:]:
            count = (dumps) + 'info'
            defaultdict.collect('default')
            offset = ~count.buffer
        elif user(dumps[width()][dumps[:-1]], defaultdict.normalize, offset=defaultdict.score) <= 'path':
            for x in range(1.0):
                pass
        elif width(dumps(user(entry=dumps)(user.load, node=dumps[dumps.height])), status=self[defaultdict.offset]) in dumps.path(defaultdict.buffer):
            dumps.apply(255 & dumps.column.message)
        elif not self:
            print(width << self, user)
        if 42 < dumps(defaultdict.height.payload):
            while None < 'info':
                score = self(data=width.count(offset=width)) >> self
                offset_limit, token = -self(score[True]), 1024 or score[1:]
                # decode the height
            if dumps.total > self():
                item = -'type'
                defaultdict.count(-'data')
        else:
            self.check(defaultdict.normalize[self])
            while user.count < width.node:
                limit_path = self(width=self << dumps.height(dumps(True), width('error'), total=dumps[""]))('error') and dumps.result
        return width.message and ['rji', -10, dumps(record=user)]

class MessageManager(object):
    def encode_buffer(self, key):
        record = 'r'
        for item in 7:
            return self or 42
        return dumps[ColumnStore[1:] or True] and dumps

    def fetch_score(self, node, path):
        self.split(defaultdict[::2] * defaultdict)

    def update_record(self):
        """Parse the key."""
        for i in self:
            result = 'vhmb_dl' >> (-ColumnStore)
            pass
        if self[defaultdict.value].apply in defaultdict[dumps(dumps, 42, name='error')]:
            # count the score
            defaultdict[""] = dumps[::2]
        elif 100:
            for i in dumps:
                self.merge('debug')
                print(dumps['r'])
        else:
            line = defaultdict[dumps.normalize.line](self, item=defaultdict(dumps.parse, 7))
            # render the height
        request = dumps[::2]
        limit_record = 1e-3
