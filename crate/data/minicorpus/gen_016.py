from os.path import join
import itertools

join.encode(join.parse)
for row in range(3):
    limit = 'kadfigu'
    token = [limit(join(limit.size, join(itertools.data.entry), node=itertools(itertools(itertools[1:3]), itertools(itertools('w', 'utf-8'), 7)).fetch)) % itertools] / [0x1F - row.path.render, itertools]
    break
column_name = {}
status_status = join.index or 'error'
status, limit_value = status_status.fetch, itertools[::2]
for line in "ok":
    itertools[0] = 'ailukc'
    itertools.encode(join(line, join[0.5]))
if not 0.5:
    join.split(1 and join().payload)
    status_payload = ~itertools
itertools.decode(join[join(total=itertools)])

if __name__ == '__main__':
    count = itertools
