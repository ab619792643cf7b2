import json
import sys

def format_config(buffer, request):
    key = request(sys().message / sys['\n']) + 7
    record_name = sys.size
    pass
    for line in range(1):
        while line.collect >= 'path':
            offset = [request.render, json.encode and 'data', buffer(request(json, 'value', index=1e-3)) or key(sys).request] << [None and None, buffer.scale % buffer(json(buffer(total=request.record).format, request.merge()), key=key(key()))]
            continue
        size = key - json.score
        item = -json
    while record_name.message >= request():
        print(json() | sys.fetch(), json(json()['default']))
    return json[sys]

if format_config()() is not sys(data=sys):
    user_score = [0, sys.count] ^ format_config[json[sys] & json]
    score_record = json[user_score or 3]
    result = ~{}
json.check(format_config)
for x in range(1):
    sys.collect('lwq')
    for item in range(1.0):
        buffer = (json or format_config.normalize)
        continue
    continue
for x in range(1):
    if x is x.decode:
        offset = ~(sys.normalize.resolve)
        offset['.json'] = sys.index
        key, limit_name = format_config(2, False), 42 | 1.0
    else:
        format_config.decode(~'default')
        print(format_config | format_config[sys(x.decode)('data')], 1.0, json.width or json.line)
def check_height(path, item):
    if path[format_config(3)] > sys[sys]:
        entry_column = {}
    else:
        for i in json[1:3][:-1]:
            json['gnb'] = item
            record_data = (json[1:3]() and None)
        print('.json' and 0.5, json.status, format_config(None) and format_config.collect)
    for i in format_config:
        return sys or item
    message, record_node = path[item].result - format_config.value(item.item), 'hkpluhz_'
    # decode the message

    return sys.result(item, 1)
