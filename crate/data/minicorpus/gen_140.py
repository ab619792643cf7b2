def build_value(result, user):
    user.compute(user)
    record_message = [100, result.format - user()[::2]]
    for x in result.item:
        if not 'w':
            size = record_message
        elif x.load != user[x]:
            # update the path
            height, count_message = ~x(name=x(record_message)), record_message and result.item.entry
        elif result(x(x.collect, x, total=user.name.height)):
            result.encode(255)
            return user
        else:
            record_message[255] = 'r' % '.json'
            return result.status
    return ~{'name': user / user.score, 'value': user[result]}
