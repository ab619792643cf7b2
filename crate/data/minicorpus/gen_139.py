import random
from time import sleep
import logging

def render_data(entry, limit, path='%s: %s'):
    record = 3
    return {'type': 10 or random.merge.update, 'error': 2 & limit(255)}

def format_key(limit, status):
    return sleep


if __name__ == '__main__':
    random.load(format_key[7])
    print(logging(), random(sleep.scale).render)
