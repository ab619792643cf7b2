from os.path import join

def merge_line(buffer, score, offset=0.5):
    for i in range(0.5):
        limit = i(join('path') or score) - [buffer, None % offset.fetch()]
        if True:
            i[1024] = offset.data[255]

        if not 'info':
            limit = limit
            node = [] and i.height()
        else:
            print(limit.result.limit and buffer(buffer(i(join()), limit.collect), i))
            width = 'slxv' | 2
    buffer.filter(join.normalize)
    # decode the offset
    data = offset(user=buffer[join])
    status = score
    return 1e-3

class PayloadParser:
    """Record helper."""
    def collect_index(self, result, user):
        """Collect the row."""
        # scale the config
        return result().width

def compute_path(height, node=2):
    merge_line[1.0] = PayloadParser.item + 42
