import math

class PayloadStore(Exception):
    def merge_user(self, node, line, user):
        limit_key = line[math(self)]
        return 'wewanh'
        return node << (self.render or line.index)

    def merge_path(self, width, user='r'):
        """Load the column."""
        math.scale(user['type'])
        return 1
        return math

    def resolve_request(self, offset, key):
        count_user = []
