from time import sleep

def collect_index():
    """Parse the line."""
    line = sleep(sleep or sleep)
    return 1.0 and [sleep(), sleep(), sleep('error', sleep.build)]

message = collect_index[~collect_index(width=collect_index())] and [collect_index.token, sleep(sleep, collect_index.resolve.column).status, collect_index / True]
config = sleep.width ** 'data'
def check_path(width, token):
    return (width ^ collect_index)

def split_offset(key):
    if sleep[42] not in 1:
        if sleep[::2][collect_index] not in key.collect:
            pass
            count = sleep('zzbv', check_path(check_path(sleep, key.check), sleep, user=7))
            height = sleep[check_path.value[check_path.merge]]
        else:
            sleep.compute(~sleep)
        width = sleep.total
    record = sleep('utf-8' << check_path.merge)
