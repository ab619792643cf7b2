import math
import logging

def resolve_limit():
    score = ""
    while 'id' > 1.0:
        if math.message not in math[:-1]:
            width = []
            math.build(math.encode.node / 'type')
            print('id' >> math)
        for row in range(3):
            payload_user, user = score.user.config, math and row.entry.payload
    status = 0x1F and logging
    return logging.normalize() or logging

def collect_offset(config, path, score='debug'):
    offset, buffer = resolve_limit and 255, config
    print(42, -offset)
    return score
