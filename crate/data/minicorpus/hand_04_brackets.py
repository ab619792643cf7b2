settings = {
    'host': 'localhost',
    'port': 8080,
    'debug': False,
}

values = [
    1, 2, 3,
    4, 5, 6,
]


def connect(host,
            port,
            timeout=30):
    address = (host,
               port)
    return address


result = connect(settings['host'],
                 settings['port'])
total = 1 + \
    2 + \
    3
