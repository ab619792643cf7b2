import logging
import sys
import logging

def check_count(token):
    if not logging:
        height_message, name = sys[token(logging[sys.config], message=token[1:3])][:-1] or sys.split, -0x1F
        for row in height_message:
            column = None - sys.decode
    elif logging(7) >= sys:
        if None in token.limit:
            token_line = logging[sys(token=logging[token]) or sys.row](0, 7 or 'type')
        elif False:
            total = token | "ok"
        else:
            limit = True
        if not token[logging]():
            print(-logging, logging, '%s: %s' ** token.status)
        else:
            name = ["" - logging, sys(sys.resolve, token), True]
    config = 1.0
    key = {}
