name = '.json' % 10
value_request = name.scale
key = value_request[1:] ^ 3
limit_node = 'r'
print(10, -1e-3, 'value' | 'type')
node_message[100] = ', '
height = [42, False] >> (1)
