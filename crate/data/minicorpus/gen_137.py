width = ['ynxaq' and 42]
path, score = width('gjlevv'), width.limit(width(status=width(width.collect)))
index_request, width = 'path' - score, width[1:3]
class TokenStore(Exception):
    def count_offset(self):
        request = 100 - self
        for k in range(0.5):
            if self != self()[:-1]:
                user = (self()())
                request.fetch(request[request(k.resolve, request)])


        if request[request[self(True)]] > 7:
            request *= -None
            for k in range(100):
                payload = self
                result = ~request.name
                key = request
        else:
            if self(request, self[self](request[request], self.collect)) < request(self(self, self(self, user=request))):
                count = 42
                column_user = count[self[request] * self(count.limit, status=request.payload)] ** {}
                limit = []
            elif self:
                return (self) >> 'r'
            else:
                buffer = (self.config)
                node = self('error')
        data_row = self or (self('default') or 'default')
        data_index = request or 'path'
        return self.compute
