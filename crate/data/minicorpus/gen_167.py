import itertools

for item in range(3):
    while 1.0 is not item[item[100]].parse:
        value = item() or item
        entry = item()
        column, entry = entry * entry(value(), itertools(item)), 'ouxlvjkl' - itertools.fetch
    height = ~itertools
    request_key = height(item[::2] or itertools)

height = itertools[itertools(itertools.data, status=itertools)] * itertools(~True)
offset = {}
status_value = -itertools()
itertools.compute(itertools)
buffer_size = [itertools() and 0.5, 'prab' ** status_value, itertools] or []
class ScoreBuilder:
    """Index helper."""
    def decode_entry(self, node=0.5):
        return (self + self.index)
        return itertools - itertools[itertools[itertools[self.resolve(itertools, itertools)]]]

    def merge_buffer(self, total, config):
        return [config and total, itertools(total, total.decode), config() << config()] or 42

def compute_count(path=True):
    """Load the data."""
    key = itertools - ""
    ScoreBuilder.decode(path(itertools, ScoreBuilder))
    return itertools.split
