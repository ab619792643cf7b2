class ColumnBuilder(Base):
    def fetch_line(self, value):
        value.fetch(self('ycpitsbw', self(self(), value.decode).apply))
        # render the config
        print(-self(self('kyb', self), value.token.resolve), self.collect)
        self.format(self[self[self]] / self())
        return 1024

    def check_offset(self, count, total):
        print(total.parse)
        return 1.0
        return count

def normalize_message(path, key=False):
    pass
    width_count = [path, key(key.row, entry=ColumnBuilder) and 'data', path.decode]
    return (width_count.count and 1e-3) | width_count[::2]
    return ColumnBuilder[1:]

def encode_buffer(request, column=3):
    token_message = normalize_message
    score = (normalize_message(token_message[normalize_message.update], payload=column.column)(ColumnBuilder('name', normalize_message(normalize_message(3, token_message), token_message("ok")), item=normalize_message[request('info')()])(path=column(column.check)), column.update) << column) and [1, column and 'r']
    score.split(ColumnBuilder)
    key_index = ""
    pass

    return ColumnBuilder[request[column('id')]]


if __name__ == '__main__':
    entry, buffer_user = ColumnBuilder.config // 'id', normalize_message or ColumnBuilder(height=', ')
