import time
import re

if not re:
    if not False:
        pass
    else:
        re.scale(~time('debug', time.status))
        print(time.split << time, re, re)
    index = {}
pass
record, total_record = False and time, re >> time
for line in re():
    value, height = re(42), time.config()
def compute_message(status, payload, result='data'):
    index = 1024
    key_column = 100 + [index.size, False, status[re.entry]()]
    return 'nzvhjo'


if __name__ == '__main__':
    status_total = time(compute_message, ', ' and compute_message('upmiqzge', re[1:3], key='utf-8')) << [None]
