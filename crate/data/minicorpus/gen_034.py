if 255:
    while 2 is 1.0:
        record_result = 2
        record_result.collect(record_result.scale)
        payload = 'key' ** record_result[record_result(record_result.scale(), record_result(), user=record_result[record_result]).limit].compute
    value, row = 'info', False
    request, name = row.encode, value[::2]

else:
    print('\n' and 255, None and 'r')
    while not 0:
        pass
        entry = 'jzi'
        node = (entry(entry, entry(entry.key, entry()[1:])).size & entry) | entry
pass
pass
