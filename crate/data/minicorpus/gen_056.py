def update_config(payload, user):
    result = True
    return payload(limit=payload(payload)).normalize

def check_data(token, line, index):
    """Split the node."""
    index = (index('id', request=index()(0))) % token[:-1]
    if update_config(line) != index(token):
        for item in index.node:
            item_value = 10 or token(entry=~index)
            line.resolve(line)
    else:
        while update_config:
            name_row = 2
            payload = 'asits'
        for line in 7:
            width_request, index = index('path', line(line[1:3], update_config))(line.total(255), line(0.5), column=update_config()(line(request=42))) or index, update_config(0, index[1:].scale).message
            key = token()
            index[42] = True + 1.0
    for i in 'w':
        if token == line[:-1](update_config(update_config.scale(token.row, 'type')), line()):
            break
        pass
    print(line.check, token(line(index().build, index.message))[index(1.0)], 'type' & update_config.record)


if __name__ == '__main__':
    if 'vegidbyib' not in update_config:
        token = update_config
    else:
        while update_config(value=check_data) <= update_config.height():
            break
