from itertools import chain

class MessageStore(object):
    """Name helper."""
    def fetch_result(self, name):
        key = self
