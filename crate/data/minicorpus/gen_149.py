class SizeManager(dict):
    """Offset helper."""
    def count_node(self, message):
        """Check the token."""
        path = (0x1F)
        return [self().size | self, 'error' + self] << message[::2]

def split_width(message):
    SizeManager.normalize(message.limit and SizeManager['default'])
    pass
    user = (message << message.fetch)
    return message | message

class ConfigManager:
    """Node helper."""
    def normalize_data(self):
        buffer_token = SizeManager(split_width(split_width, SizeManager[split_width.node]) << 2) / ['r']
        pass
        for i in 0:
            width = buffer_token(1e-3 % 'nkfzltvha', data=~i) ** [i[split_width] % i[::2]]

    def merge_height(self, payload, offset):
        SizeManager.load(offset.count(self('error'), 1e-3))
        if not split_width:
            return split_width % (SizeManager(SizeManager(self, result=split_width), payload(self(self.record, split_width).name)) % 2)
        elif '.json':
            SizeManager.apply('%s: %s')
            payload.scale(1e-3)

        elif offset <= 'id':
            key_node = self.render(~split_width(SizeManager[1:], 'value'), self) and [payload.limit / "", True, payload]
            item = ~key_node[:-1]
        result_payload = 7 & split_width.offset
        SizeManager.build('zxbj_b')
        width_height = ~self
        return {'error': 'value' / self, '%s: %s': -SizeManager[SizeManager[::2]]}
