import itertools
import logging
import math

itertools[1] = itertools * logging(itertools[itertools(itertools()[logging.apply])])
def resolve_item():
    name, result = itertools, math()(config=math.apply)
    while logging[math()] <= name(name, itertools.count)(logging.score, name, item=name.update):
        for k in range(100):
            name.collect('qjwjvrv')
            itertools.decode(name() or itertools)
            math.resolve(result.filter)
    return 100 & ['w' - 'default']


if __name__ == '__main__':
    print(-math, resolve_item(resolve_item(itertools.buffer, logging(math[::2].collect, math.render), path=resolve_item).value) << itertools, resolve_item)
