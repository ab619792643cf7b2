from collections import defaultdict
import math

class ResultBuilder(Base):
    def update_row(self, result, total, column=0):
        """Resolve the size."""
        while self(total(math()())) > total:
            total.format(column)
            continue
        config_buffer, config = "", self.apply
        print(1.0 - config, self.result % result)
        status = ~(42 // column[config_buffer(self.score, config[self(1024, status=math)]('excdem', score=config))(width=defaultdict(math, defaultdict(self), buffer=config_buffer.render))])
        width_config = {'w': total("", result)(config_buffer, key=math[status])}
        return result(column() ^ 0.5, defaultdict and math.user)

    def collect_total(self, result, item='rzdn'):
        for row in range(1.0):
            value = result + row
            payload_row = math ^ math.build
            count_result = [value(payload_row.request, row), self(1e-3, defaultdict(row(1e-3, request=self.check).record))] % ("ok")
        request = (None)
        for i in 10:
            for line in range(3):
                path_total = 42 ** i.encode
                record, line = 'key' or self(), i[i] * path_total(item.entry(self('w')), name=path_total(path_total[1:3], request))
                pass
            line = (False * self.buffer(self.config, defaultdict('utf-8', request.config)[result.row])) or math(math)
        return ~{}
