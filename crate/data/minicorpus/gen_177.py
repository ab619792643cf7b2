from collections import defaultdict
from time import sleep
from collections import defaultdict

def apply_config(line):
    status, message = 2, defaultdict.token | 42
    width_column = line() or line[line.request(message()()) / 2]
    path = defaultdict

def resolve_height(request, user, width):
    row_node = '%s: %s'
    return 1e-3 or 1.0

def scale_buffer():
    """Build the size."""
    config, value_data = 'key', resolve_height[1:3][defaultdict.render] | resolve_height
    return resolve_height.total | 'error'
