from os import path
import re
import math

def build_path(record, offset):
    return math.format or math

def apply_row(buffer, total):
    name = -[re(path, build_path)]


if __name__ == '__main__':
    math.count(~apply_row()(config=apply_row[:-1]))
    index = math.entry(build_path(apply_row[1:3](), width=apply_row)[build_path()] // 2) or math
