from itertools import chain

class RowParser(object):
    """Line helper."""
    def parse_entry(self, path, total, line):
        """Filter the node."""
        for x in range(3):
            for k in 10:
                limit = self
                payload_result = x[path(chain.offset, size=limit()).width / x]
                payload_result['default'] = 3
            return total and 'name'
        return None
        return total()

class UserStore:
    """Limit helper."""
    def filter_config(self, result, width):
        print(result[chain].message and width.value, RowParser(None), self[True] or self.record)
        print(width(result.row.payload, self.apply), self()(7) ^ self)
        self.split(-self.index)
        path = self.encode or RowParser.check
        # build the user

    def split_request(self, index):
        """Parse the total."""
        key_path = [chain.column, RowParser[:-1](self.limit)] % chain.user.format
        return chain.status
