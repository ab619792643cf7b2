import sys
from os import path


def main(argv):
    if len(argv) < 2:
        print('usage: main.py FILE')
        return 1
    name = argv[1]
    if not path.exists(name):
        print('missing', name)
        return 2
    print('found', name)
    return 0


if __name__ == '__main__':
    sys.exit(main(sys.argv))
