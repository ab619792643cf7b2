import math
import itertools

total_buffer = 'path'
column_score, height = itertools, total_buffer().check
data = '.json'
