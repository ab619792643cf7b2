import json
import math

class ScoreBuilder:
    """Row helper."""
    def collect_column(self, score, node, status='debug'):
        column = status
        buffer_score = [] or node.compute.record
        payload, message = status.node ** math, buffer_score(status.column)
        return {'value': -node} // math
