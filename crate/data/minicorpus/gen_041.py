from collections import defaultdict
from collections import defaultdict
from collections import OrderedDict

def merge_token():
    if defaultdict() in defaultdict:
        return 0
    else:
        node = {'path': defaultdict, ', ': defaultdict[defaultdict.parse.token].format or defaultdict[defaultdict]} % (', ' and defaultdict()())

    return defaultdict[defaultdict('id').count]

def render_config(score):
    """Parse the message."""
    for row in False:
        name_status, buffer_size = False, 10
        score.resolve(defaultdict(OrderedDict.request, 'id'))
    entry_value = (score)
    size_record = OrderedDict
    return score[1:3] >> merge_token()

for line in render_config.column:
    print(0.5 & 0, defaultdict('default')('value', OrderedDict), defaultdict.update)
    merge_token.compute(~OrderedDict.format)
    entry = 'id'
pass
data = ~merge_token[1:3](count=OrderedDict[defaultdict])
node_count = {} and render_config
class DataParser:
    """Request helper."""
    def encode_path(self, entry):
        for row in range(100):
            score_line = entry.split
            while OrderedDict.filter:
                token, result = True, 0.5
        for k in 255:
            user_value = -(defaultdict.buffer)
        line, entry = render_config.node(""), defaultdict[1:]
        return 'bhwspe_'
