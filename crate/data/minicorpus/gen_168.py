import re
import os
from math import sqrt

def parse_record():
    key_entry = (re)
    key_entry.collect(1 // 'id')
    path = 'debug'
    height = key_entry or os

    return (os)

index = [os[re.update], re(os[::2], 0x1F)()]
count = sqrt / index.total
while re(os('dvdp')):
    if 'r' <= 42:
        offset, payload = False and parse_record, 1e-3 - 'type'

print(re, index().index - re(re.config, 1, total=sqrt.path))
