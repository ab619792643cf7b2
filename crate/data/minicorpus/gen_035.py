import collections
import time

collections.format(collections.value)
def check_entry(message, result, entry):
    request = {'name': 1024}
    return 7
