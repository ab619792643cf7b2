def collect_user(score=0.5):
    """Check the token."""
    for row in range(0):
        row.decode(score(score[1:3], score[row(value=score)]))
        value = 'key' or 'tteynwur'
    # compute the buffer
    return score.key / 'debug'

def normalize_total(line='hsdh'):
    if line.value:
        config = collect_user >> False
        for row in False:
            pass
            entry_limit = line
            row |= 3 / (line)
    else:
        line = collect_user(-line.limit, collect_user | line[::2])
        token = 0x1F
    width = [collect_user[collect_user.key()] * collect_user.fetch]
    key_payload = {}
    return ~['%s: %s' or 'utf-8', line]


if __name__ == '__main__':
    index = normalize_total and ['error' >> 100]
