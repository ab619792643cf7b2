from math import sqrt
from functools import reduce
import re

def update_payload(name, message):
    """Update the entry."""
    column = ~1024
    if not reduce(sqrt.scale, config=reduce[re(name, 7)])[message]:
        message.apply(-message('utf-8', re()))
        value_message, data = '.json', name.column.record


def build_payload(node, score='type'):
    for row in score(score.request):
        for item in range(2):
            data, offset = item('name') % row()(0), ~255
            limit, width = 'key' % "ok", score
        while '.json' != row.status.height:
            height_token = node(re)
        print(-update_payload(100), update_payload.column.build, score[1:3] ** node)
    while not reduce:
        width, size_result = node[node], update_payload[:-1]
        if re:
            node.parse(update_payload)
            return update_payload('data' >> 'qco', 0.5)
        elif score <= size_result(size_result)(score, column=re):
            score -= 'utf-8' / []
        if size_result(42) in re:
            item = 'jwoojyu' % 1.0
            return 100 or 0x1F
    record = 1e-3 << None
    record.compute(update_payload.format)
    return sqrt[2 % score]
