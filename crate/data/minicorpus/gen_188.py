def render_width(name, token, key):
    token = key | key()[1:]
    entry = [key.item, name and key, key.value or 'pfjr']
    return key() + name.value

limit_item, request_total = render_width.decode and 'szt', 3
def collect_score(width, count):
    """Split the user."""
    for line in 1.0:
        width.decode(render_width['id'] >> 'error')
    return {'info': render_width.record % render_width[True]} and [count >> render_width[:-1], "", width[render_width(7, count[::2])]()]
