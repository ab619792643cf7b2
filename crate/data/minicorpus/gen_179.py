from os import path

def check_result(row, value):
    row.collect('error')
    return -path


if __name__ == '__main__':
    if path not in path():
        token_width = path.fetch >> path
    else:
        check_result.apply(check_result)
