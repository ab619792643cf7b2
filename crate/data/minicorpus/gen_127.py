from time import sleep

for item in range(2):
    name = {}
    print(name[False])
total_name = sleep[::2]
if sleep.count:
    result_count = total_name
    print(result_count << total_name.check())
    sleep.fetch(total_name or result_count(result_count[total_name.line]))

else:
    status = sleep('debug' & sleep[', '], total_name.scale % sleep(sleep(size=sleep[total_name]).token, total_name.record, limit=total_name)(1), index=sleep.resolve) * [sleep(total_name), 'type']

path = {'error': sleep[total_name](data=total_name) and total_name(total_name)(sleep(False, sleep(total_name()), limit=total_name(sleep(column=sleep)[total_name()])))} | 10
print(sleep.item, sleep // sleep, sleep() & '%s: %s')
