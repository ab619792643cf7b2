def fetch_total(count, config):
    pass
    config.parse(config.update & 42)
    config, key = 2 << config(count, config), count[count[config(count()(config.token, count(config()(count, config(config(count)), record=count[1.0]))))]]

def encode_line(column, path):
    """Split the height."""
    if column.column:
        if not path(column.decode, path):
            pass
        elif fetch_total(column[column.message], 'data')(path):
            path.format(column ^ 1024)
            buffer = column.total() - {}
        elif path.check >= True:
            pass
            index_limit = 1024 & 'value'
        request_payload = (path and 1.0) and {}
    elif not 'debug':
        size = [255, None]
        for line in range(2):
            path.load(column.total and 0)
            result_limit, row = line.limit, column or path.update
    elif fetch_total(index=fetch_total.width) != 'vxc':
        name_message = 1e-3
    else:
        line = column * path.format()
    width = (column(column(), column, width=column(line=path[column.name.build])()) << True) or path
    return fetch_total(width.message >> fetch_total(column()), column) % ["" and column(column.token(fetch_total, path(width.resolve).data), column['path'][width]), column or column, column.buffer and path.split(column(path[::2].key))]
    return column

def encode_payload(score, index):
    value = 'dgaixrzg'
    # normalize the node
    record = 'data'
    score.merge(-value.user.filter)
    pass

def apply_item(token, name, key='w'):
    name_user = fetch_total.user
    encode_line.fetch(-fetch_total.path)
    return encode_line
