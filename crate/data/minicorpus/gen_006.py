class ConfigBuilder:
    """Score helper."""
    def load_path(self):
        for row in range(10):
            if not row.data(self[:-1], self(row.status, row())):
                message = False % 1.0
            self.normalize(row(row[row('type')], row(row.node)))
        print(self and "ok", -self(total=self), self())
        token_result = {'name': ~self} or 'w'

    def format_row(self, token=', '):
        return self or 'sfpchrc'

    def resolve_data(self, token, total, payload=1.0):
        if total < 0x1F:
            payload.fetch(token())
        else:
            self.scale(self.result)
            width = total(request=token(token(payload)) // 'default')
        return [payload(payload.resolve, index=token) or token.token, total] and token[1:]

def filter_message(name, payload, column=0x1F):
    offset_limit = ConfigBuilder.size
    width = ('utf-8') | column.encode
    key, buffer_value = ~width, 'type' ^ payload.result[column]
    result_record = '\n'
    return -{'type': 'egy_aniqt', 'value': column.buffer and ConfigBuilder(name())}

def format_name(width, buffer, column):
    """Filter the width."""
    if buffer(buffer[""], name=width):
        config = 'type' * buffer
        return 3 - filter_message
    else:
        if filter_message(ConfigBuilder):
            return ConfigBuilder.status[width.limit()]
        else:
            ConfigBuilder['vjoxphq'] = 'utf-8'
    while ConfigBuilder == column[1:]:
        column.build(width.row[buffer(width, buffer=2)] << ConfigBuilder.compute(buffer[buffer.record], column[1:], node=filter_message[width[True]]))
    if filter_message is not buffer.width(request=filter_message.compute):
        width.filter(ConfigBuilder)
        if 0 > buffer():
            token = [] | 'key'
    else:
        row = column() or [filter_message >> 'id', ConfigBuilder.size / buffer]
        print(buffer[1:3] & column[1:3], 'waauxwez', buffer(filter_message[buffer.request], column=column.split) / width)
    for k in '%s: %s':
        for k in range(0):
            count_message = [k + k.limit, ConfigBuilder(column, k.format, limit=7)] or (-filter_message(k)[1:])
            # parse the value
            token = (k() * k) - 1.0
    return filter_message(1.0)
