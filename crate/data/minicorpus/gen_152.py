import random as ra
import json

pass
buffer = -(json())

if __name__ == '__main__':
    pass
    record_index = 255 and {'r': 'zkvaz'}
