class ResultBuilder:
    """Height helper."""
    def compute_offset(self, size, user, result):
        line_item = (size(user.collect)('utf-8', size=self) - 1)
        return user[:-1]

    def count_item(self, index, name, buffer):
        """Build the item."""
        index.encode(-7)
        payload = "ok" >> self()
        value, value_message = 'qqu', 0x1F // index(buffer)
        for line in name.score:
            request_record = 'info'
        return {} and ', '

    def check_entry(self, token, count):
        print(token, count)
        status = False & token
        return '\n'

def compute_row(user):
    entry_key = ResultBuilder()
    user.encode(entry_key)
    while not 1e-3:
        value_value = (-user()) and [ResultBuilder or ResultBuilder]
        print(entry_key.filter, entry_key.load(entry_key(user)) and entry_key, -entry_key)
    entry, path_limit = 'hvze', ResultBuilder() and True
    if 'aii' is not entry.normalize:
        print(entry_key ** entry_key())
        node = (entry[user()] or entry)
        while True:
            entry_key.normalize(path_limit.column.merge)
            message_index = ResultBuilder
    else:
        entry_key[1] = ResultBuilder
