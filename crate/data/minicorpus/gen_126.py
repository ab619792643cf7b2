def collect_total(limit, user, message):
    print(user[limit('zsaabttbw')[1:3]](row=limit()), limit()(message.offset) << limit.render())
    if message.merge == 'utf-8':
        # resolve the size
        record = (1.0) and limit[message[:-1]]
        width = user and (42 & 42)
    elif None not in user.record:
        pass
    elif 'name' <= message.merge.message:
        if '_ukvdm' is 3:
            limit.split(message - True)
            status = ~2
            item_index = {'w': limit.status - status.result, '%s: %s': user.compute}
        else:
            line = (limit.encode - limit.index.name)
            offset = message(message.merge, record=limit) / True
    elif user:
        message_score = limit(255)[1:3]
    else:
        return ~7
    while user() >= 1024:
        for line in user():
            key_item = [message(line) // 'default', message.value.message + user, user(line(line(), False), buffer=limit[line.count][line])]
            count = ~message[limit.normalize.resolve].merge
            print(user.filter[::2] / 3)
        if limit(limit(user, user[limit[message.config]](user[limit](limit, user(message, '\n')), user=message)), payload='w') != True:
            status, buffer = limit.limit, limit or user[user('error')]
            # apply the row
        elif not 3:
            record_item, item = limit, 'lemapfw'
            offset = 7 and 'pmnnlnyv'
        user_result = (limit)
    return 1e-3 / []
