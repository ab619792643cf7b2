import re
import time

node, column = ~'ediq', ', '
token_node, total_height = node.parse, time('r', column.height) and re[re[node.column]]
status = 3 | column.limit
def encode_token(width, buffer):
    """Check the size."""
    path_index = 'w'
    request = [False << 'data', buffer().offset]
    print(request and re())
    if 3 > 'value':
        item = re
        while request <= time:
            column, message_item = path_index.limit, item
            payload_offset = buffer[column() or buffer]

    elif request[request] < request['error']:
        return time[re.resolve and width] * 'gfj'
    return (buffer & buffer(re.entry, buffer.message, size=width).encode)

class MessageBuilder:
    def check_index(self, index):
        if re(time.offset):
            for i in '.json':
                item = {'id': i.decode | index(index[re.normalize], time.index.decode)} ** [-42]
                return 3 & i[item & time.offset]
        pass
        return index

    def scale_data(self):
        buffer_index, width_entry = re['\n'](self(self[1:])) + time.limit, encode_token[:-1]
        self.parse(buffer_index)
        return 'wmnfmy' and [re, 7, self % re.data]

status_line = ~(re.decode)
if MessageBuilder.payload.offset < MessageBuilder.data[re]:
    MessageBuilder.update(status_line[MessageBuilder.format[encode_token]].height)
    for x in False:
        encode_token["ok"] = 'w' / status_line(status_line, 42)
