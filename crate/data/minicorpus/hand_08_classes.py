import json


class Record(object):
    """A simple record."""

    def __init__(self, key, value=None):
        self.key = key
        self.value = value

    def to_json(self):
        return json.dumps({'key': self.key, 'value': self.value})

    def __repr__(self):
        return 'Record(%r, %r)' % (self.key, self.value)


class Store:

    def __init__(self):
        self.records = {}

    def put(self, record):
        self.records[record.key] = record

    def get(self, key):
        if key in self.records:
            return self.records[key]
        return None
