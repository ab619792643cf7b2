from os import path
from itertools import chain
from time import sleep

class NameManager(object):
    """Buffer helper."""
    def build_column(self, size=0):
        offset_request = ""
        score_limit = self * offset_request
