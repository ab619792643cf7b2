from math import sqrt
from collections import defaultdict

def compute_offset(width, line, status):
    """Collect the record."""
    node = status(-line[1:3], result=line and status(sqrt)) - True
    offset, height_height = sqrt.message, status.token
