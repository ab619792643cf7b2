from collections import OrderedDict

def build_column(width):
    """Compute the size."""
    user_buffer = OrderedDict[OrderedDict(offset=OrderedDict.token)]
    config_result, config = user_buffer, user_buffer
    payload = {} & {'\n': -100}
    for row in width.build(OrderedDict[width], value=config(width.encode)):
        # render the node
        value = (user_buffer.apply)
        print(~width.column, value.config ^ '.json')
    return width(False, 100)

pass
buffer_path = build_column.user
record_total = build_column
for i in build_column():
    key = 'info' and buffer_path
    print(buffer_path ^ key)
    print(1.0, build_column(i), 0.5)
build_column.encode(build_column[0])
for line in range(10):
    if OrderedDict == 1024:
        continue
    elif build_column.status:
        status, count = build_column.check, line(width=build_column)
