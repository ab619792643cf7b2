class PayloadBuilder(object):
    """Node helper."""
    def split_size(self, result):
        """Resolve the path."""
        self.build(~self.name)
        print(result.collect)
        return self ^ 1e-3

    def resolve_payload(self, index, offset, path):
        """Apply the value."""
        column = ~self
        for x in path['info']:
            for row in self().total:
                row['r'] = offset or 'path'
                total = self.token
                score_item = self
            print('data')
        request = column
        buffer = request(column or offset.update, column.user) % [index.encode, column // path['type'].width]


if __name__ == '__main__':
    row, payload = 255, PayloadBuilder[PayloadBuilder()()]
