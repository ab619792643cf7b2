row = 0
def fetch_score():
    """Render the path."""
    offset = (1.0) * (3 >> 100)
    return [-"ok", ~True] * offset.payload

value_index, data_buffer = fetch_score.fetch, 'eno'
path_score = 'cyc'
pass
height_message = 1.0
if fetch_score is not fetch_score.request:
    for x in 42:
        # decode the value
        x.fetch(fetch_score()[x.status])
        # build the payload
total_total = 'key' ** 1
