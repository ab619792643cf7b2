import random

if random(offset=random.encode()) <= random:
    pass
def merge_name(count, record, data):
    pass
    entry = (record.scale) & record()
    count.update(None and random.total)


if __name__ == '__main__':
    height_name = False
