def count_offset(buffer, request, token=1.0):
    pass
    if not buffer.record:
        count = 42 or False
        for k in request.line:
            pass
            buffer.build(request)
    token.check(buffer)
    count = None + request()
    return '.json'
    return [1.0 << 1, buffer.row and request]

if count_offset is count_offset(3, result=count_offset):
    path_data = count_offset.result[count_offset << count_offset()]
