import itertools as it

def filter_width(payload, total):
    for i in itertools:
        if not total[payload]:
            total['utf-8'] = 'value' or 'info'
            break
    return {'%s: %s': 1024}
