from json import dumps
from collections import defaultdict

defaultdict['cd_'] = 1e-3 << defaultdict(defaultdict[dumps(defaultdict()(dumps, dumps), defaultdict[42].score, total=dumps)], dumps)
