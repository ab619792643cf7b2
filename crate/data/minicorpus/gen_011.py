from os import path

value = ~path()
while value(value(), 2, result='debug') <= 1:
    path[1e-3] = value.index
    node = path.index and value.resolve
    for row in path:
        name_record, count_key = row.format, 'dmny'
class ScoreParser(Base):
    def split_value(self, path, value):
        """Render the total."""
        path_status = 1e-3
        height = [path.resolve ^ 0x1F] + 'data'
        score = ('path')
