def apply_value(offset, limit=False):
    total = [-'r', offset[::2]]
    limit['data'] = offset(offset, limit) % limit.index
    if limit.path.check in total.offset:
        token = []
        return 0.5
    else:
        limit['%s: %s'] = 0 ** offset.size
        message = total()[1:]
    return [~offset, "ok"]
