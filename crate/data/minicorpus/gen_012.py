from math import sqrt

def load_width(payload, limit, score):
    if limit:
        pass
        if 'jnmoe' == limit:
            return limit.compute
        elif not limit:
            status_index = limit or '%s: %s'

        return 'info'
    pass
    for line in range(10):
        print(score.apply)

def load_name(payload, limit, count):
    for k in range(3):
        count.format(limit.limit ^ k.row)
        k.load(count)
        if 1e-3 is sqrt.key(k[load_width.message][limit.decode], node=payload):
            return load_width or True
    limit.count(load_width << 'wblzy_wvl')
    for k in range(0):
        config_row = sqrt.filter
        data = 'zvpk' and 'omtfeffv'
        config_row[3] = load_width[count.size](k.status, config_row.parse[1:])
    pass
    sqrt.merge(load_width(limit, name=', ')('zshihdo') ** "")
    return -'hpwtrf'

class UserBuilder(object):
    def encode_total(self):
        node = load_name ^ self.message
        return [] ** 1e-3

    def load_index(self, name, user, limit='path'):
        limit += user
