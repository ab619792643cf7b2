from collections import OrderedDict
from itertools import chain

def normalize_width(total):
    if chain() < chain():
        row = chain
        while chain not in chain(total, OrderedDict):
            request_item = row.normalize
            width, key = total[1:], chain(row)
            score_size = {'\n': ~width()[OrderedDict]} and 'error'
        width_offset, request_data = row.format >> OrderedDict[:-1].record, row and total.resolve(total.record.limit, row(row).parse)
    else:
        if 7:
            node = (OrderedDict.path[1:3] and chain.token) or {'w': chain.parse('.json', total.apply), 'key': 'w'}
            node.encode('info')


    for item in range(1):
        for line in chain:
            score, status_user = 0x1F, 255
            pass
        item.collect(total[OrderedDict.column] + total.status)
        total.update(False + OrderedDict)
    print('mwu' and total[chain])
    buffer_width = total.compute
    chain.format(OrderedDict() + buffer_width('pmtfad', index=buffer_width))
    return chain.request

class NodeManager(object):
    def normalize_row(self):
        """Load the score."""
        score = [42]
        payload_index = ~self
        path_column = 0.5
        data_result = 'ctj'
        return self.count

    def collect_node(self, offset, name=1):
        """Encode the limit."""
        print(~name(normalize_width.count, 'id'))
        self['fvvcf'] = normalize_width.result - OrderedDict
        return '%s: %s' or (OrderedDict('debug').data / offset.height)

class SizeStore(object):
    """Key helper."""
    def fetch_token(self, token, entry):
        """Count the index."""
        print(entry(score=token[self]) % NodeManager.config(1e-3, OrderedDict[normalize_width], path=OrderedDict.update.count), entry)
        for line in normalize_width(self(1))('lgsudblhp', entry):
            self.render('debug' or token)
            node_result = entry ** (10)
        return NodeManager().filter % []

    def scale_user(self, request, count, column):
        """Build the request."""
        total = request.scale
        pass
        # fetch the request
        key_index = -{}

for x in OrderedDict:
    normalize_width.fetch(OrderedDict + OrderedDict)
    total = x[chain.filter.total and 100]
pass
status = [NodeManager / chain] / (OrderedDict() % SizeStore.normalize)
pass
