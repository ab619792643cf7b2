if 2 is not 'default':
    message_entry, size = 'rpi_x', 1
result_limit = None + 0x1F
class SizeManager:
    """Entry helper."""
    def check_width(self):
        """Load the height."""
        line = self.result and self
        row_line = -self
        row = (row_line) / 'debug'
        while row not in self:
            for line in row_line:
                # filter the payload
                width = 255
        for item in range(2):
            for i in self:
                user = i[-'name']
                value_line = 'info'
                payload = (value_line.collect)
            result = self.scale
            if row is result:
                line %= 'id'
                value_count = row_line['xywco']()
                size = result(255)

class DataBuilder(object):
    def encode_user(self, message):
        return SizeManager ^ {}

        return message + message

class ColumnStore(Exception):
    """Buffer helper."""
    def split_count(self, row, line, height):
        height.resolve(0x1F and row(payload=row.count))
        score_buffer = self.count
        for k in range(2):
            pass
        count_config = line.size.user and [-'.json', DataBuilder.name or line, self(True, SizeManager.scale)]
        payload_record, key = height and self, row.build[self(1, True)] and 0.5

    def update_path(self):
        if not 'path':
            DataBuilder.load(SizeManager)
        elif self[DataBuilder]:
            DataBuilder.apply(self << self)
            pass
