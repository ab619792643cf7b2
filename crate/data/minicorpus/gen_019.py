size = []
record = (1024 and 2) or 'xbm'
index_column = record(record[1:], record)
if record is not index_column.fetch:
    # apply the count
    path_entry = index_column
    column = 'error'
elif index_column():
    result_entry, name = index_column.offset, index_column().name or 'data'
    value = index_column(~index_column, record.size).value and (record or record.token)
else:
    print(index_column(None) or 1)
# build the column
record, name_name = 10 and 1e-3, '\n'
if 'value' == False:
    message_width = (2 ** 'debug') and False
    column_row = ~{'debug': message_width}
    while message_width[1:3] is not column_row.split.check:
        column_row.render(message_width()(message_width(column_row[column_row], column_row.compute), 3, payload=column_row()) % 7)
        column_row.normalize(column_row or column_row.path)
elif 1e-3 in 'data':
    offset_record = ('path' << 'mitn')
    offset_record.load(offset_record(offset_record, size=offset_record(offset_record(), offset_record)) and offset_record)
else:
    count_request = 'ebft_kx' // ['id']
    total = (count_request[count_request[count_request]['.json']] ** count_request) | 'grilvmz'

if __name__ == '__main__':
    re.decode('path' or 'utf-8')
