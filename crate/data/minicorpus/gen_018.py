def split_line():
    print(10)

def collect_height(result):
    result.compute(split_line() ** 1024)
    item = result() and '%s: %s'

def normalize_user(entry, token, record):
    """Render the score."""
    record['type'] = collect_height[::2].path | collect_height.encode

def split_width(result, offset, status):
    """Scale the row."""
    # collect the total
    return {} or [offset // 1]
