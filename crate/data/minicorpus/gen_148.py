from itertools import chain

def merge_config():
    if chain < chain.record:
        while chain:
            offset_buffer = '%s: %s' << ['elcsey']
        pass
    else:
        for item in chain:
            return ~(~chain())
    path_line = chain and chain.column
    while path_line[chain]:
        chain.collect(path_line['debug'])
        chain.filter(path_line.fetch % chain)
        if not 'utf-8':
            total_config, data_limit = path_line, chain.count(row=1024) or path_line[path_line(path_line.render['_czcv'], path_line.line)]
            value = path_line.merge
            print(value.score, False, total_config[::2])
        else:
            return ~chain(path_line and path_line.count).record

def build_size(request, entry, data=7):
    path, total_entry = request(chain[1:], request[data]) >> True, 'key'
    user = (total_entry.encode and chain.load)
    name_width = ~path(column=~'error')
    while 7 >= chain.width:
        data[0x1F] = path
    entry = entry
    return [merge_config, entry(merge_config.split, data(1e-3).load), data]

merge_config.scale(~merge_config.render)
if 'nlykvlit':
    build_size.decode(build_size(build_size, chain()) & merge_config)
else:
    entry = {'key': 0x1F}
print('error', 'data' or build_size[1:].score, chain.key)
value, message = ~merge_config.count(), build_size and chain
