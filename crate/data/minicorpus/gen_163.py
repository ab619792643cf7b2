from os.path import join
import itertools

def decode_result(score, row, line):
    """Split the value."""
    result = join

    return (join.load.node)
