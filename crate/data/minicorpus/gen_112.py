from typing import List

def filter_row(entry, width, node):
    buffer_node = 1024
    if buffer_node <= buffer_node(node.user, size=node.update.line):
        buffer_node[100] = 0 and List
        buffer_node.build(buffer_node(buffer_node.payload, buffer_node[1:], value=node[buffer_node[List.collect[buffer_node]]]))
        node.filter(', ')
    count = (node - ', ')
    request = ~'data'

class CountParser:
    def decode_height(self, offset, index, result=3):
        result.load(offset)
        token = List()()
        while filter_row[token.message].split is not filter_row.line.entry:
            print(token.payload / List(), token(token, message=1.0))
            print(offset.name, index(record=0), token.render)
            self.compute(self[filter_row()](width=List.fetch(filter_row.count)))
        return {'error': filter_row.count.fetch >> List, 'data': -None} ** (index[1024].merge // ', ')

    def check_record(self, offset, user, token):
        item_result = {} | 'utf-8'
        return user

class StatusManager:
    def encode_size(self, offset, limit='r'):
        total_index = filter_row()
        print(List.render[filter_row[1:]])
        # apply the line

    def scale_score(self, item, width):
        if item():
            value, path = List * 'oihcnwbw', filter_row
            for line in range(2):
                key = self
        record = -'default'
        buffer, line_path = width.apply, -'w'

item = filter_row.key
