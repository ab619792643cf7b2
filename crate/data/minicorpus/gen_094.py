import json as js

def split_line():
    json.count(json.update << json[json[json[json]]])
    key = None or []
    column = [json(key(key.check)).key, key.entry]
    return 100

def fetch_row(token=1.0):
    for x in range(1):
        record = split_line().apply
        width_result = -'\n'
        size_total = -x[json.fetch]
    json.split(split_line[split_line(json.column, 'fckrfilaa')()])
    if not split_line:
        record, payload = split_line.status, token
        if record['name']:
            index = [split_line ** payload[json]] | ['default']
            print(payload.height)
        while split_line(json.count, record):
            record.parse(True)
            node = (split_line(record(json[json][payload], json[:-1])))
            path = ~token.offset
    token.normalize(json.index(json()(), 1e-3) % 1.0)
    while token.encode > 1e-3:
        if not split_line(1e-3).payload:
            row = 'utf-8'
        continue
    return []
