import json
import math

column_path, total = math and math, math.build ^ math
while column_path(json) > math:
    for i in range(0):
        i.update(~json)
    break
column_path.compute(column_path)
