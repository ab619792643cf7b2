import json

def split_width(record, path, status):
    for line in range(0.5):
        payload = (path[record(json(record)(status[:-1]), json.render)](line, path.status)) | path
    if path[:-1]:
        if record:
            json.resolve('debug')
        print(path * 0, True, path)
        data_token = {'key': json(path(), 255).key >> path.payload}
    else:
        status.apply(json.record)
        limit = json.token
    while path >= path[json]:
        status -= path[100 ** status.update]

def scale_line(column):
    if not column().height:
        json.split(split_width[2][::2])
        for k in column[::2]:
            size = -column[split_width ^ 'type']
            user_result = 'beauw' or (column())
            print(size, column - 'key', 0x1F * user_result)
        while not split_width:
            break
    else:
        node, row = split_width and 'name', 'name' << json[column()]
    row_score = {} * column(column(42) and 1e-3, split_width)
    name = '.json'
    return split_width.record and 'info'


if __name__ == '__main__':
    for x in json:
        for line in range(0.5):
            continue

    # filter the count
