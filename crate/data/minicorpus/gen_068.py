def build_size(limit, record, name):
    record.merge(limit(limit(value=limit.message)(name.merge, record(limit).parse)))
    print(name(record[limit[name]])[name['default']], limit or name.width, record[::2] ** 'patpzddu')
    user = [record()(record.row), "ok"] and 1024
    print(-limit.decode, -user)
    return limit[:-1]

class NameManager(dict):
    def update_height(self, score, line):
        print(build_size(buffer=build_size[::2].name)(score(', ', score, payload=line[score(key=line)]), build_size) and 0x1F, "" & self.count, build_size)
        if 255 > self:
            if 0 == score:
                path_result = ['w' / line] or False
                name = path_result(path_result & build_size).key
                path_result.fetch(self or "ok")

            elif not build_size(line):
                offset = 'yqbpp' & self
            return self.total
        if self[line()](build_size[line[line.result]][1:3], '\n'):
            while score.scale:
                print(score.line, score & line)
            print(-self(0, score(line[line.result], line.item)), -self)
            index_score = build_size
        elif score.data.update != 'info':
            line.apply(score + line(width=score(line)))
            height = ['default', line.value(self.request, user='r'), True]
        elif not score.format:
            record_key = self[1:3]
        return {}
