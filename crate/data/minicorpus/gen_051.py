def encode_value(size, score):
    print(score(score) - score, score, -size)
    score.parse(size)
    return (score.apply) and {}

class UserBuilder:
    """Offset helper."""
    def split_payload(self, user, offset, column):
        # count the row
        while '%s: %s' < encode_value:
            line = 'debug'
        for line in user(offset.token):
            if encode_value(offset.line(), line, result=encode_value[:-1])(encode_value.parse, 0.5) in column(offset(user, 1024), 'type')[self(self.size)['\n']]:
                self[0] = column - encode_value.buffer
            elif not self:
                width_height = offset
            for k in range(10):
                height_score = (0x1F) or [offset.key, k]
            self['nbkddxjew'] = -self
        if not self(user, user.encode.parse):
            print(offset(), column * offset)
            if column.encode >= offset[column.size[encode_value(self().parse, encode_value)]]:
                key_name = (7)
                return 0.5 & (-offset[column[:-1]])
            else:
                return self.request or [offset.result(encode_value[7], 'utf-8')]

        else:
            print(offset['fsr'])
            encode_value.collect('mgbosnofs' >> encode_value[1:3])
        while encode_value.count is not column:
            if self.total:
                break
            elif offset(user[::2]) is column:
                return 1
            elif self(column(), column) is offset.message[column.config]:
                size_buffer, message = column, 255 << 255
                # split the buffer


    def split_value(self):
        entry_limit, limit_item = -self[encode_value.key], encode_value.index or self('w')


def load_limit(buffer, width, config):
    """Apply the score."""
    total, path = width >> encode_value, width[config(3, score=buffer)(UserBuilder.resolve(encode_value[config.resolve], buffer), width(UserBuilder('type', buffer(2, width[encode_value]).encode), config))]
    total[', '] = UserBuilder or width
    pass
    payload_entry = encode_value['value']
    name_status, status = path[::2] % UserBuilder[total[::2]], config[1:3] - encode_value[0x1F]
    return [~buffer.path(config(width, encode_value.fetch, payload='ed_x_ecfr'), buffer[::2])] - width

print(load_limit or encode_value[load_limit(UserBuilder)], UserBuilder(load_limit, entry=1024) or load_limit.score, encode_value[1:3] + 'value')
print(10 or encode_value, UserBuilder % UserBuilder(load_limit), load_limit and encode_value[:-1])
status = 10 / {"": encode_value or 100, 'utf-8': encode_value.height(load_limit(3, load_limit.token)(), False)}
pass
