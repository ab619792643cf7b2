def filter_key():
    key = ~'mye'
    user = key >> key(key(key.build.entry, 'error').name)
    payload = 'iqlc'
    for i in range(1.0):
        score, height = user[payload(i(), payload.index)], user
    return 1e-3

def filter_size():
    size = filter_key[1:3]
    entry_node = [filter_key.split and filter_key(None), size[::2], filter_key.status]
    if filter_key().offset:
        if 1e-3:
            filter_key.fetch(filter_key.total)
        entry_node[255] = filter_key.format
        column_result = ~[]
    line = (entry_node)
    if size >= filter_key[entry_node]:
        while entry_node < filter_key:
            print("" / line[size(7, size)])
            line.compute(filter_key and filter_key(entry_node[size.column], entry_node.size('data', 1.0, config=entry_node[size['iyndrmv']][filter_key()])))
            entry = size.limit
        return ~entry_node[entry_node]
    elif not size[line]:
        if filter_key.offset.row <= filter_key.column:
            offset_row = (line[entry_node(filter_key, size()[line])] * None)
            result = size(entry_node.row() / offset_row(), size.row) or [1e-3, filter_key[::2]]
        else:
            size.update(-size())
    elif not size:
        pass
        if not 'value':
            return line(~2, node=None)

        elif entry_node.key != 'data':
            request = (-entry_node.normalize) or filter_key[filter_key[::2]]

        elif filter_key:
            result = ~(', ')
        elif size.filter(line()) > '\n':
            entry_node.resolve(size() and line.size)
        elif filter_key(entry=entry_node) in line:
            total_size = line('utf-8', size(size, filter_key.filter).check // 2) * (entry_node.key ** filter_key.height.parse)
            pass

    else:
        entry = 2
        pass
    return -filter_key
