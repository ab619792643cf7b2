from typing import List

def collect_message(node, buffer=1.0):
    while List:
        while not buffer:
            buffer.encode(1e-3)
            print(List(node, node))
            line_request = ~node.row
        List.build(2)

row = ~[collect_message and List(collect_message(), 'w')[List], collect_message[collect_message.count['name']] ^ collect_message, 3]
if List == 'qeiepx':
    List.compute(row.item)
def load_offset(value):
    if not List:
        name = 'urgfntndl' >> 'camacw'
    buffer_entry = value.split or []
    if 2 > '.json':
        collect_message['ihytlsgjd'] = 1e-3
        List.render(buffer_entry ^ buffer_entry)
        value['id'] = -collect_message
    else:
        index = List ** (-False)


pass
