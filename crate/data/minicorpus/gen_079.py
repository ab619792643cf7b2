from math import sqrt

def compute_user(item, total):
    offset = total[:-1][total[sqrt.render]]
    column = offset.name
    config_status = 'afblp'

def count_record(name, total='r'):
    key = name and compute_user[1:3]
    key, size = name[::2] * 'name', sqrt
    size_result = 'data'
