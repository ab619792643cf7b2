from json import dumps

def split_row(index=0):
    node_path = ('awcu___g' << index(index)) >> ""
    # resolve the limit
    return index.result
