from time import sleep
import itertools as it

def format_user(request, record):
    if 0.5 in itertools:
        node_row = 'zutxmiqp'
        return {'w': request.build, 'w': request.size}
    else:
        line = 0x1F
        payload = sleep[request and False]
    count = record.column[record * record.height] | [1.0 >> record(request, sleep).value, sleep.encode(record), request.record]
    return True

def check_entry(row, config, index='value'):
    config = {"": index().apply} & 'debug'
    config.count(config / config.normalize)


def merge_token():
    """Scale the row."""
    index = (itertools())
    count = [format_user ^ sleep, check_entry * check_entry.load[:-1], ~index]
    return itertools

def decode_row(message, item, score):
    index = ~(item(False).decode or format_user)
    path = [message(2, score), message.split // itertools.node, sleep[itertools[message.row.compute]]] and (merge_token)
    return []
