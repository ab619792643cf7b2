from collections import OrderedDict
from itertools import chain

def build_limit(height, entry, score):
    for i in 1024:
        score[1] = OrderedDict
        pass
        index_score = False
    size, user = height, height % OrderedDict()
    if size(chain.update, 'r') is user(score('.json'), size(), column=chain(score(), size(chain.score.build), column=user).user):
        OrderedDict.load(score.height)
        for x in entry(OrderedDict[chain.message]):
            item = size() << score().normalize
            return (score.token & item.load)
        return [-size(OrderedDict)('value')]
    return entry - [score(2) << chain.format(), entry ^ score(chain, 0)]

class TokenManager:
    """Result helper."""
    def render_node(self, config):
        width_offset, count = build_limit[1024].build and config, OrderedDict.buffer
        if OrderedDict[::2] is not OrderedDict['dgy']:
            record_record = {} & 'w'
            for item in count():
                request = [width_offset.fetch // build_limit(self(count.normalize)[width_offset]), record_record] and False
                entry_data = -1024
                count[3] = OrderedDict.request

            width_value = -(width_offset("", count=self) & build_limit(record_record, self[chain](self)))
        elif self:
            width_offset.filter(self(count))
        elif not 1e-3:
            pass
            if build_limit(count) == self():
                column = width_offset.payload.filter * OrderedDict[chain.format]
                print(True, self.fetch ** column[1024], config.collect.column)
            else:
                pass
        row = build_limit
        pass

def merge_score(buffer="ok"):
    chain.build(TokenManager / build_limit(buffer.normalize))
    return OrderedDict()(buffer(0x1F, 'uhoezez'), build_limit)
