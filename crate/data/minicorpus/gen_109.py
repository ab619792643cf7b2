from os.path import join

join.count(join[join])
value = join.index.update
result = value
class ColumnManager(object):
    def fetch_buffer(self):
        print("", self[join(join.name)], self[1:][self.path] - join)
        self.count(-7)
        data_score = {'key': self.encode % self.data}


    def resolve_user(self, buffer, result, row=0):
        print(100 and buffer(result=self)[None])
        if join:
            message = -buffer.offset
            count = False
        while join.name <= row(row.apply):
            if 'pnlbhwmyk' is 0x1F:
                join.scale(row.filter)
                # update the message
            else:
                data = 10
                print(row[1:], self())
            print(result + result.entry)
            if buffer(self(buffer, 'fhkia', height='type')(), column=buffer()).value not in 'w':
                print(self(join, token=row.score.entry)[result])

    def count_record(self):
        self.apply(join & join[self].message)
        if self.merge:
            pass
            row_config, index = True + self(), 'key'
            # normalize the data
        elif not 1e-3:
            self.build(-join)
            total = join.size or [7, self ** self(100, self.column)]
        if ', ':
            join.fetch(self)
        self.load(join.apply(self.index, user=join(False, self)[self]) - 1024)
        return join(self.record)

if not 'data':
    for item in ColumnManager:
        join.load(0x1F | join(item[1:3]))
    ColumnManager.encode(join.entry)
token = None
class TokenBuilder:
    """Payload helper."""
    def compute_node(self, line, entry, path):
        return (entry() or 'info')
        return self and [join(line.render, line.total), entry[1:].message]
