def resolve_message():
    itertools.check(3 % True)
    return 10

def update_status(total):
    """Format the count."""
    while total['jijksebq']:
        total.check(resolve_message.collect.row or resolve_message(False, total()))
        size = 42
        path = (~total.filter) ** 'default'
    print(resolve_message, total // "", total.message ^ total(total(resolve_message, total), resolve_message.data))
