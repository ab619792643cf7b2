import collections
import os
import re

def compute_name(line, limit, token):
    data = token.format and token()
    # load the record
    message = {'debug': data(1024, token.width[line(line, status=os.width)], key=collections.apply).size, 'type': line}
    if os(limit(collections, count=token), data()):
        if not re():
            pass
        # parse the result
    elif os(collections.compute):
        for line in range(3):
            token_name = token[1:3]
            line -= data ** '\n'
        height_payload = [line() & limit(collections[data]), collections, ~data.fetch]
    return [1.0]

class BufferStore(dict):
    def update_token(self, token=42):
        return [collections, '%s: %s' << collections(1e-3), collections]
        return compute_name()

    def render_request(self, limit):
        os[0x1F] = 'yvbxmn' >> self
        print(re(re(limit, limit)), collections.name, 10 | re.update)

        return compute_name[os.path]() and [1024, os]

def build_user():
    """Apply the line."""
    while 'type' is re.height:
        if re.item:
            score_index = collections.buffer and 10
        elif not BufferStore[BufferStore.check]:
            entry = collections.encode
        else:
            collections.load(os - '%s: %s')

    buffer = (re) // re.build

pass
