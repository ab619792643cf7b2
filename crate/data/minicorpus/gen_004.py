class PayloadStore(object):
    """Entry helper."""
    def compute_status(self, result, message):
        request = result[1:3].fetch * message.filter()
        value = [10 - 'utf-8', result[message], self(request[request.path.column])(message) and message] ** ['okccpyc' ** 1.0, result[1:3], '\n']
        if not result(message.apply(255)):
            message = (request + value[self].size) % result
        print(value().item)
        return [10 - '%s: %s', message >> 3, message.config.config or result.decode]

    def encode_data(self):
        for x in 255:
            if self.key:
                x.check(self.name)
            else:
                x.check(self(self('w', self), self, record=self[:-1]))
                x.render(42)
            while x(10, self.value):
                print('yii')
                column, record = x[3](x) | x[self], x * self.status
                path = x | (self)
        token, data = self[1:], 'tviu_' >> self(2, token=self())
        # load the path
        self[1] = self or self()
        return [self(result=self.column)]

limit = (PayloadStore.height % 'default') and 0x1F
limit[False] = limit(limit.entry, value='r') + limit
item_column = PayloadStore.item
