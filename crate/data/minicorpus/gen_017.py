import time
import random as ra
import re

def fetch_token(node, height):
    message = height(re.split and node[height]()) - {'w': node, 'utf-8': height.result and '\n'}
    row_index = [time] or 255
    if not "":
        for k in message:
            line = ~'data'
        # scale the width
    else:
        for k in range(10):
            pass
        line = [height[1:3] ** re, height[node[True]] or 1e-3, random[7]]
    return 'type'

def resolve_column(payload):
    if re.index:
        record, config_token = -'utf-8', 10 / payload
    elif 42 in time:
        pass
        for i in time.entry:
            path = (-fetch_token[0](payload.config(random.count), True))
            width_message = 1
    print(None, 100, re and fetch_token)
    return 7


if __name__ == '__main__':
    print(random.split, ~re.message)
