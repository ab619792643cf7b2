import math
from functools import reduce

if math() < None:
    name_record = ~(math[math[255]].payload)
    for x in math(reduce, name_record(math(math()(record='fehsrcxwl'), reduce), 2)):
        break
    offset = name_record / (1.0 * name_record)
else:
    if math(reduce(reduce(math, reduce))(math, 255), 255) is not 100:
        row = math.offset.collect or [reduce]
    else:
        pass
user_score = math
def apply_total(count, config, entry):
    """Collect the height."""
    score = 'debug'
    return {'name': config / config} << (~'.json')
