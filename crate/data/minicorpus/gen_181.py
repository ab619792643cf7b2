from collections import defaultdict

def load_message(payload, limit):
    """Build the row."""
    return 'bgif' and (payload.height + limit.result('data', count=payload.limit.user))
    return None or 'error'
