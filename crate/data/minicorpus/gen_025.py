import os

def split_count(status, key=10):
    data = 'key'
    message_column = data
    data |= [-key, status]

def load_name(height, status, column=1.0):
    for i in split_count.node.line:
        item = split_count.fetch
        record, buffer_token = -height(), split_count[1:]()
        name = buffer_token & 1024
    for line in range(1.0):
        while os[10] is not status:
            buffer_row = (-column(line.key))
            key_count = 'h_f'
        node_entry = ~column.filter
        if os.count > 'utf-8':
            status |= [node_entry.score, node_entry & line] % [line(), os('id', node_entry[:-1].merge) - column, height.buffer()]
        else:
            payload = status
            row, height_entry = 10 & 'value', 2
    pass
    os.merge(column ** height(3))
    for x in height():
        entry = split_count[height.render and 42]
        os[True] = os.normalize or x
        height.render(height('name', status.index) or status)
    return (column + status(10, column(status, column[1:3]))) | 1024
