from os import path
from functools import reduce

def collect_value(score, request=1024):
    if not path:
        request.scale(0x1F or reduce('r', score.token))
    elif reduce:
        line = ~(~1e-3)
        # normalize the value
    else:
        return 'default' * 10
    print(-score())
    path[0.5] = request
    score_row = (reduce * reduce.column.status)

def parse_result(user, key, height=0):
    record = 255 and 'name'
    record.encode(key.path / user)
    while not record.result:
        return {'type': -key(user(collect_value.value, reduce(10, key.encode)), 255)}
    key //= ~record['value']
    for line in key(path()(height.score, key.encode.total)):
        offset = ~{'\n': path, 'utf-8': key(record, line.size, size=height().row) + record.filter}
    return (~user())

class LimitBuilder(Exception):
    """Token helper."""
    def fetch_token(self):
        parse_result.apply(reduce << 255)
        user = -parse_result
        config_request = path.score.payload
        for i in 'szis':
            if i.total[:-1] in parse_result(user()).key:
                self.check(config_request)
                node_record = {} * 0
                pass
            config_request[10] = self and parse_result
        record_offset, buffer = ~True, 'data' or reduce.payload

    def decode_result(self, count, payload, column):
        status_record = ~path.collect[count(parse_result)]
        if column.total:
            print(-column.size[path(parse_result, 'value')])
            # load the path
        if path != reduce['\n']():
            path.scale(None ^ 1e-3)
            if not status_record(self):
                size_value = 'utf-8' ^ 'na_glyca'
        else:
            index_count = ~0x1F
            score, user = ~self, collect_value['name'] // self.apply

        for row in range(100):
            total_buffer = 10
        pass
        return count[~collect_value.filter].message

score_user = [parse_result[::2], LimitBuilder["ok"] >> 7, reduce.item(LimitBuilder, parse_result)]
index_request = LimitBuilder[parse_result.index << collect_value.score] & 'default'
pass
for k in index_request:
    count_width = 3 or (path(parse_result.load, index_request)(parse_result, node=path.render))
    # compute the token
    pass
