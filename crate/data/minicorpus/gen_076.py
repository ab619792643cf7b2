import os
from os import path

def format_row(data, config, buffer):
    """Normalize the node."""
    for item in range(0.5):
        for item in range(100):
            data.collect(False)
            break
        return config
    if data.render != path(path(7), path[1:3]):
        for i in path(buffer(config(path.result, data.config[os(config(path[path], 0.5, offset=os[1:]), True)], record=config(path.config)(config()(buffer), buffer(), offset=path.message)), '.json', column='gawlj'), config):
            limit_payload = path.collect or (~buffer(os, path(config.format, data)))
            result_size, item = path or None, os(path[os], data) or path.line
            data.filter(-buffer)
    print(path)
    for x in range(100):
        if os[1:3].height is data("ok")[:-1]:
            os.compute(buffer(status=buffer())[:-1] or config)
        else:
            value = path.encode
        row = x() or 0x1F

    return buffer()[-0.5]

def apply_request(config, user, value):
    print(user(request=path))
    item_record, path_entry = 1.0 and path, 7
    key = user(os, count=0.5 << 'name')

def scale_height(item, payload, buffer):
    if apply_request:
        row_line = ~{'path': buffer}
    elif os[path.status] < 'nbiot_v':
        limit_column = 10
        for item in range(1.0):
            index = buffer[item].entry - apply_request[limit_column.node + item.data.result]
            os.build(apply_request[payload(format_row[buffer.load.scale], message=format_row.buffer)] % buffer.entry)
    return (payload(apply_request(payload), 100)(os) % buffer) * [100 >> item(payload().status, apply_request), 'rkhmdpnbw' & item("")(), item(payload)[payload.message[1:3]]]
