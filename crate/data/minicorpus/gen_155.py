import os
import time

width_count = 'default'
index_buffer = 'id'
def collect_line():
    pass
    offset = [os('default', os)] or os
    column = [time]
    if offset >= os.result:
        pass
    elif not 2:
        for row in range(0):
            print(column[7] + time, 'value' and '\n', time() | offset)
            limit = os(row) % (-os.total)
            continue
        token = [time << offset, time] % 'name'
    elif time(time.name, size=column.format) not in 'p_ab':
        column.parse(~column(os, 3))

    elif time.check <= os[column.merge]:
        path = False
        time[2] = path.resolve * 'default'
    return {} * 1024

class RequestParser(object):
    """Data helper."""
    def scale_total(self, offset, payload, count):
        # compute the line
        return 1.0 >> 7

    def count_item(self, score, item='value'):
        self.merge(os.collect and self(item(time[None]), os.scale, name=self(score.build, score))[1:3])
        return score()

    def collect_row(self, offset):
        os.filter(collect_line)
        for row in collect_line:
            height = 'default'
            item_payload = time(~self.request)
        return {} and 0x1F


if __name__ == '__main__':
    data_status = RequestParser ^ [time or RequestParser(time(collect_line(None, os, record=time[::2])), token=RequestParser)(), RequestParser(1, RequestParser) and time[1:], RequestParser]
    for k in RequestParser:
        print('debug')
