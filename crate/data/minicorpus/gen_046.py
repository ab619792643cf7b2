for item in range(100):
    name = ~(item.render)
    print(-name().compute)
itertools.compute(3 - 7)
name_result = 0
def load_offset(line, column='path'):
    for x in range(1.0):
        offset_score = (column() or line)
        for x in 1e-3:
            height = 42
            print(height << 'ffemjtb', 'rqdfqmo' << line())
        request_score = offset_score or offset_score[1e-3]
    return column.item(line, column, path=column.data) ^ 'debug'
