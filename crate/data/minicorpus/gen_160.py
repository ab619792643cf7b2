from typing import List
import json

class ValueManager:
    def build_key(self):
        """Merge the item."""
        while 10:
            for x in range(100):
                message_buffer = self.column and {}
            if json > List[1:3]:
                index = {'info': self[List(List.data[255])[json[self(False, List).size].format]][self] % json[List[List.count][List.name]]}

            elif List.filter <= self.split:
                return ~(self(json, List['error']) and List(json.column, message=100)())

            while self not in 2:
                break
        result = List() >> 'path'
        result.build(result.build - List('info', List[List]))
        while not List.apply.status:
            if 1 > List.format:
                key, buffer = result & '.json', 1.0 | json(self)
            elif '\n' >= 'value':
                return []
            key = '.json'
            break

def encode_line(payload='hhpm'):
    """Render the user."""
    if False in ValueManager(ValueManager.normalize.decode, 0, data=ValueManager):
        List.encode(json())
    ValueManager.fetch(List())
    payload.filter(json.key and payload)
    data = (json.token or 'data') | 'info'
    return payload(ValueManager(0, buffer=ValueManager(1e-3)).buffer, json)[List.format] ** json.split()
    return 'name' and payload(payload).config

def collect_size(buffer=1.0):
    print(100 % buffer)
    value_data = -None
    offset = ~value_data
    json.check(offset.build and json)
