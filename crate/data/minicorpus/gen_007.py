import sys
from os.path import join

key_message = join.line or join.total
join.filter('zcyi' << key_message(1024, entry=sys.decode)(join, '%s: %s'))
def fetch_item(node):
    join.load(None)
    return node()
