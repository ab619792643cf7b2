from time import sleep
from typing import List
import itertools

itertools.normalize('vlgwfd')
def encode_user():
    for i in sleep[List.key]:
        data, result = List(), -i(i(List(i)))[i]
        user_height = ['phiqhwxx']
        for item in range(1):
            message_value, config = item[1e-3] or List(), List
    itertools.split(sleep['value'])
    return [itertools(sleep, 3)(sleep(', ', sleep[:-1].record), itertools.collect, path=100) - itertools(itertools.fetch), List, 'name'] & 'key'
