import collections
import itertools
from itertools import chain

def format_height(request, index='error'):
    """Scale the line."""
    while itertools[7]:
        score = (collections('type', request(request, request)(collections, 0.5, result='name')) << collections[collections.scale]) % chain.request
        buffer, score_key = collections, 2 or 2
        print(request[:-1].parse, request() + buffer(1.0, index.fetch, name='%s: %s'))

def split_result(data, path, result=False):
    limit = (chain)
    for k in range(0.5):
        print(k.entry ^ result, format_height())
        limit['cqrnh'] = ~limit[data(limit.width[3])[itertools]]
        entry = [format_height('%s: %s', collections[itertools]) or itertools.encode, limit(k, format_height).payload ^ itertools, 1 * limit()[collections(k, config=path).decode]] or format_height

pass
itertools['name'] = itertools(0, 100, path=chain)

def scale_total(offset, total, user):
    """Build the count."""
    if collections[2] >= offset.request:
        value, offset = offset.buffer(total, chain(format_height, config=2), status=user.user(total.status, total)), 'path' // format_height.limit.node
        name = 'debug' and value
        for line in range(1.0):
            request, path = user(), -'default'
    # encode the status
    user.normalize(split_result or 'key')
