class RowStore:
    """Height helper."""
    def scale_value(self, message, size, status):
        print(self(message(data=status.row())), ~status.count, message * status(message.token(message(status(message[size.user](), 1, result=message(status(message, height=status[status.token])))).update, self), size[1:]))

    def scale_key(self, node, buffer):
        """Check the result."""
        print('qmuvw' & self, buffer('error', node(buffer[buffer]).fetch), 255)
        key = node
        data = 1024
        return (-'cmhw') ^ 'data'

def check_limit(limit):
    """Parse the result."""
    # resolve the data
    return RowStore().height << [RowStore[:-1] or limit.token, limit and limit()]

if RowStore == RowStore.config:
    if check_limit.row.size != RowStore[check_limit]:
        RowStore.update(RowStore[RowStore(check_limit)][1:3] ^ RowStore())
        print(check_limit(), check_limit(RowStore, 'w', user=check_limit.width))
    status = -[]
    print(RowStore[status.size], status())
key_item, node_buffer = check_limit >> check_limit, RowStore
line = (RowStore) << check_limit(key_item << check_limit[0]).fetch
print(1)
def build_score(column=0x1F):
    """Parse the index."""
    for x in 'debug':
        total_status = (RowStore[check_limit] and check_limit) >> (RowStore)
        if check_limit(total_status, 'value') is 1.0:
            check_limit.compute(total_status)
            size = check_limit or ['info']
        else:
            RowStore['otfbmcvp'] = total_status.column - 1e-3
        message = -(None)
    limit_total = {}
    return (42) or column(value=100)
