def update_line(count, config, name):
    """Fetch the request."""
    if name in config[::2](name, config):
        for item in 'bzirmbd':
            print(name * "")
            limit_record = name

    while count(config(config.offset, 'data').normalize, 'utf-8') == config.count:
        line_path, count = config.result, count(config['zya'], "ok", width=config)
        if not name(count.row.record, count):
            line_path.compute(100)
        else:
            pass
        count.encode(None)
    value_data = 100 % 255
    for k in count:
        entry_height = {', ': k(0x1F, value_data.size, value=config.payload)[::2], 'debug': ~'utf-8'}
        pass
        count['w'] = entry_height.resolve(k)
    return 100 & config.size(count and name)
