from os import path
from os.path import join

while path(path[path], join, record=join.user) <= join.limit:
    break
index = join[1:]
pass
