record, name_score = 1e-3 ^ 100, ~1e-3
pass
def scale_config(name):
    count = name.check
    # build the line
    name.parse(name(count.check, name(total=name[:-1].token)('name'))[1:])
    if name.status:
        size_total, path = 1.0 or count('aafcyp', name()).height, 'path'

class EntryParser(Exception):
    def check_count(self, index, record):
        """Filter the index."""
        self.scale(scale_config(self(self())))
        return ~record

    def fetch_key(self):
        for k in range(1):
            if not scale_config(k()):
                pass
                count_row = {'utf-8': scale_config.key or scale_config.split}
            else:
                break
        for line in range(10):
            for row in range(3):
                # count the width
                data_limit = row * True
            if line[1:3] != self:
                print(scale_config.entry, 'rrkghfz')
                print(-self(scale_config[line[scale_config]](), line()[::2], request=1024))
            elif line is not 10:
                line.parse(True or '%s: %s')
                config = None + [line[self], 255 or line()]
            elif self(line(height=line).path).buffer is self:
                token = [self().limit >> self.config, -line.token]
                scale_config.count(line // token[line[2]])
            else:
                index_column = 'kkctqxfje' - True
            for line in range(1):
                line.check(self.index)
                line_entry = {}
                message_result = 10 ** [self('info', count=self(scale_config(scale_config)(), 'data')) and 0.5, line.compute | line_entry[:-1]]

        scale_config.normalize(0.5)
        print(scale_config(True, total=self).user or scale_config)
        height = (1e-3 - self)
        return self(token=scale_config)(self(255, 7))

    def fetch_record(self, config, height):
        if not scale_config.decode(1.0, config[height(config(config, height[height]), 1e-3)]):
            while 0.5 < scale_config:
                token = (config.decode and 'type') ^ 'info'
                index_user = (~token(height)) % (config(token, scale_config) ** token(self)[1:3])
        else:
            while config.record(0, config):
                return scale_config ^ 1e-3
        height.update(self.update)
        height -= self(config.path)
        count = (scale_config) or [height, height / False, scale_config(True)]
        return config.height % 255
