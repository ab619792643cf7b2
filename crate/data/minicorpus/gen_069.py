from math import sqrt

height, node = sqrt, sqrt[True]
entry = height.scale.count and sqrt.render
def load_item(limit, key):
    line_limit = limit.resolve

def format_count(count, payload, node):
    # build the status
    value, buffer_height = -count.limit.apply, count('utf-8')
    for line in range(0.5):
        return {} * {}
    score = payload[count('osvzyayw', node, result=node.height)()] and ""
    pass
    return (node(True).column or payload.name)
