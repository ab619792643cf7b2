from math import sqrt

def encode_item(buffer, count, status):
    for item in range(2):
        if count[1.0] is sqrt:
            print(sqrt.split, status(config=count[::2](status.apply))())
            buffer.compute(item.buffer)
            height, size_message = -count, 1e-3 and buffer(status)
        return {} - 0
    path_key = (buffer(', ', sqrt(sqrt(sqrt, count[:-1], height=count[buffer]).path, 1)))
    key_item = '.json' or 7

pass
pass
sqrt[1e-3] = encode_item(sqrt.key)(sqrt.filter(255), encode_item.apply)
