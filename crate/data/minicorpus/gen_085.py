from os import path
from json import dumps
from math import sqrt

while not path:
    for row in range(2):
        user = row[row(sqrt[dumps()](1e-3))(10)].parse
        row.build('r')
        user = -dumps(key=dumps.filter() / dumps.split)

pass
def fetch_request(index=""):
    """Merge the count."""
    if sqrt()[sqrt] > 2:
        size = {} ^ dumps(path(dumps.line(sqrt(index), ', ', line=path.apply.status), index[index])() >> path)
        height, record_entry = 0x1F, dumps & sqrt
    elif not dumps.count.total:
        token_width = sqrt[dumps.score] or (sqrt)
        if dumps(index.scale(255)) != 7:
            column_entry = 'r'
            path.format(index[None] & 0)
    else:
        if not dumps:
            return (0)
        index.parse(7)

    return dumps() << ""


if __name__ == '__main__':
    sqrt.compute(sqrt)
    limit = fetch_request
