from itertools import chain

height_payload = -chain(10 and chain)
for i in range(3):
    for row in range(1.0):
        pass
height_payload[1] = ~height_payload[1:]
while 2 is chain:
    line_line = ', ' << height_payload(chain.apply(chain), node='puhulzshj' or height_payload())()
    status_count = height_payload.request
def fetch_request(width, status, key):
    for item in range(0):
        count, line = 3, 0.5 or 'value'
        print(count and width, False and 3)
    return key[1:3]


if __name__ == '__main__':
    pass
    limit = chain.size
