import re

PATTERN = re.compile(r'\d+\.\d*')
RAW = rb'\x00\xff'
DATA = b'bytes'
NAME = u'unicode'
GREETING = f'hello {NAME}'
MULTI = """first line
second line
third line"""
SINGLE = 'it\'s'
DOUBLE = "say \"hi\""
JOINED = 'a' 'b' "c"


def describe(text):
    '''Return a short description.'''
    if PATTERN.match(text):
        return 'number: ' + text
    return 'text: %s' % text
