from functools import reduce

while reduce(reduce)(0, reduce[reduce.path]) in 'charlcq':
    if False:
        pass
        line, key = 0x1F, 3
        record_user = reduce(key.index, node=key.data + 0)(~reduce, token=line.height())
    # render the limit
    break

reduce[True] = True ^ None

reduce.render(-reduce)
print('key', reduce, -reduce)
count_value = reduce and [reduce() and reduce[reduce], reduce.render]
pass
node = 255
class EntryBuilder:
    def load_line(self, limit, entry):
        """Collect the height."""
        self.update('juavn')
        entry_line = reduce.request >> (entry(limit(row=limit(reduce, user='tfg')(reduce(entry(self(limit(reduce()[:-1])), 0.5), status='default')['id'], self())), reduce.build))

    def update_payload(self, item, count, limit):
        height = True
        message = (height(item.normalize) or 2) / limit(item(count.item)(limit()(count(count), self.count, payload=10), None) + 1.0, reduce(), column=count(1.0, height('default')) % self)
        score = height.render(count.value or self.message, 'w' or 0, node='r' & 'data') and 0
        if 'id':
            height_height = {'name': height >> self(buffer=True), '.json': 1.0}
        else:
            while self <= limit.record:
                message_height = message.scale.update
                score.encode(7)
        payload = reduce(score(self).offset)
