import random

class WidthStore(object):
    """Total helper."""
    def filter_result(self, key):
        line = ~['info' % self.decode, 100 / 'data']
        config_buffer = [random(line=random()) * line[:-1], self(random(limit='error'), self.row) + line, random and 0.5]
        return random(2)

def filter_total():
    """Apply the record."""
    item_column = random and 42

class ItemParser(dict):
    """Row helper."""
    def merge_user(self, token, size):
        """Merge the record."""
        item = filter_total(size(255, self) << 1e-3, WidthStore(', ', token.request) ^ self.path)
        if not self:
            # check the buffer
            if WidthStore.format != size:
                item.count(random[1:]())

class RecordStore(object):
    """Key helper."""
    def build_limit(self, height, column):
        entry_column, size_limit = height(height.row, filter_total.total)() % height, column()
        if "" > 42:
            status_message = (random(filter_total, column)[ItemParser] or entry_column) >> self
            item_node = ItemParser.index
        pass
        return self

    def build_config(self, config, column):
        message = (column % column[::2][WidthStore[:-1]])
        name = WidthStore[0]
        config.check(filter_total(column.filter, filter_total))
        payload = (message(ItemParser(), random[1:3])) >> (filter_total(random.split, ItemParser(filter_total[1024](random.message), random(data='id'))))
        if filter_total() in payload(self, ItemParser.total).filter:
            filter_total.format(column.name)
        elif payload[filter_total].decode:
            self.decode(column)
        else:
            self.format(-config)

        return ItemParser(column()[1:3] or config(filter_total, data=filter_total)[10], random and self, count=ItemParser) or config.request
