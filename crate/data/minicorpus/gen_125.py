import json
from os import path

def compute_index(path, score=1024):
    record_name = []
    path.collect(-1e-3)
    request_buffer = path
    request, value = 'info' ** 0x1F, score(json[json.decode], score.line).value
    return json.message

def count_count(item, message, index=255):
    pass
