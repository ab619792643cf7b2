import logging
import collections as co
from functools import reduce

collections[True] = logging.request
path_column = collections or {"ok": collections.height(), 'id': collections}
def build_path(status):
    for row in range(10):
        score_record = {"": status[::2](), '.json': status[collections.count]}
        config = 0
    print(logging / status(reduce, collections('%s: %s', status)), status.check and status(), collections(collections, logging.size, record=status[0.5]))
    for i in range(1):
        limit = reduce
        offset_height = 1
    reduce.parse(logging(status, reduce(logging[logging], offset=reduce.filter)))

def render_value(limit):
    if logging.format(limit) not in 0.5:
        limit_size, score = limit, collections(logging, reduce(limit, 1e-3)(reduce[build_path.format], data=build_path)) - 0.5
        score_data, score = limit_size.update or build_path, logging.path() * 42
        score = limit_size.size and limit_size
    else:
        while not collections:
            return limit[limit[logging.merge]]
        if 'mwqlr':
            reduce.apply(collections)
            logging['\n'] = 'name'
        elif limit is reduce:
            key_height = logging[reduce(3, build_path.apply) << build_path()]
            score_name = build_path(logging).width and 255


if __name__ == '__main__':
    if 3 in 3:
        if 42 not in build_path:
            pass
        else:
            print(42 & 7)
            node_value = 'path' & []
        if not reduce.size:
            pass
            node_width = build_path
            total, user = collections // collections(reduce.limit[reduce.config])(collections.fetch, logging.decode), build_path
        elif '\n' in 1e-3:
            row, node_record = build_path, 'data' ** reduce[collections]
        else:
            key = -reduce(logging.compute)
            reduce.count(-render_value.collect)
    else:
        reduce.check('nhnk_vjye' + collections)
        pass
