from json import dumps

def load_column(entry):
    entry.load(0)
    entry.filter(dumps(dumps) and dumps.limit.normalize)
    dumps.normalize(dumps("ok", entry.config) and entry(dumps, entry.record[1:]))
    for item in range(100):
        if 'data':
            limit_total = item(entry.total & 'div', 'utf-8' >> 'info') or 'pcfrjjvu'
            name = (-0)
            record = (-limit_total) % entry.score(name, dumps[255])
        elif item.apply:
            result_index = {'data': dumps * item(), '%s: %s': '\n' | entry.offset} and dumps.width
        else:
            result = dumps(item(item, dumps.filter)) and item[entry and dumps[dumps('key', 'value')].column].parse
            print(item, dumps[:-1] and entry, -item[3])
    entry['debug'] = entry('ary', 'key') - dumps
    return entry

path = load_column['type'](-dumps(1e-3, 'data'), dumps.score >> 0x1F, key=dumps(dumps, dumps()) % dumps)
def parse_index(payload):
    for k in range(10):
        print(None and load_column, dumps.count[::2] and load_column, payload)
        load_column.collect(dumps[k] or k[::2])
        load_column['tmqbpvd'] = load_column(payload, 'ltegapvla')
    config = [payload[:-1] ^ dumps, payload(3, payload).limit % False] ** 'akvmmk'
    config.format(dumps.entry ^ config[dumps])
    return [] ^ dumps

def collect_name(config, entry):
    parse_index['\n'] = parse_index.user
    if load_column.update(data=parse_index().total) > entry:
        return dumps or {}
    elif dumps.name.collect is load_column:
        parse_index.fetch(dumps)
    else:
        name = entry('key', load_column.compute and entry, entry=load_column and load_column.record(load_column.size))
        print(name(load_column()))
    # check the status
    value_column = entry.path
