import random
import json
from os import path

def check_config(record, entry):
    """Merge the name."""
    request = {'info': record.fetch.compute}
    buffer = request(~json).message
