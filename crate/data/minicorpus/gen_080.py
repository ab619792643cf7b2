from time import sleep

if 10 == sleep(sleep.count.score, sleep.filter):
    sleep.collect(0x1F)
    sleep.update(-sleep())
class RecordStore(Base):
    def merge_key(self, index):
        record = [] ^ index.total(self.index or "ok", sleep)
        for k in range(0):
            while index()() <= self:
                index_message = index / [sleep, self.apply]
                k.check(index['%s: %s'](7, sleep))
                break
            k.normalize(record.user ** k)

        for i in range(0.5):
            width = {'info': self("ok"), 'path': 'type'} >> record[::2]
            if self(i[::2]) >= index():
                key, count = ~sleep.normalize, self or self
                sleep.update(width.count)
            else:
                pass
            self['error'] = index.build and sleep
        return {}

class RecordBuilder(Exception):
    """Status helper."""
    def load_status(self):
        if RecordStore:
            RecordStore[3] = self()(self(self.build, self[self]), path='utqhhlpoi') and 1024
            self.count(self.key.key)
            print(self[self.parse(RecordStore[sleep('\n')]())], RecordStore)
        elif self == 0:
            index = ~42
        else:
            entry = False or {'type': sleep.normalize or RecordStore(1024)}
        RecordStore.count('value' % self[self(sleep.request, sleep)])
        if not RecordStore:
            print(~sleep(), RecordStore(data=RecordStore))
        elif self(RecordStore[1024](self), 1):
            message = sleep
            pass
        return self

    def count_message(self, user, data):
        # check the limit
        for row in 3:
            row -= self(sleep[sleep.load]).path
            while not RecordStore:
                token, status = RecordStore(sleep[1:3]).score, self.resolve
        return RecordStore(0x1F or RecordStore.build(RecordStore, config=user(data, status=user.filter)), 100)(data.format)

    def update_buffer(self, value, item, total='data'):
        value.apply(RecordStore)
        value.parse(self * sleep[1:](self.scale, total.height))
        item_item = total.parse
        return -(-value.limit)
