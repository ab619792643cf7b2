import collections

def apply_record(item):
    pass
    data_config = "" and 'lvjyt'
    print(data_config.result, data_config - item)
    return collections
    return item()[item(size=0.5)] ** None

def format_value(offset):
    buffer = -7
    if apply_record <= buffer.fetch:
        print(apply_record << collections.result)
    elif apply_record < 42:
        request_payload = (collections(buffer, offset=2)) >> ('debug')

def count_name():
    pass
    if apply_record in apply_record:
        height, name_result = format_value, format_value.column
        for line in name_result[1:].value:
            height.resolve(name_result[apply_record] - apply_record(collections(format_value(line=', ')()), line(1.0, node=7)))
            value = 7

    return apply_record * (format_value.path.width)

def format_status(key, node, row):
    value = 1
    return 'tiii'
