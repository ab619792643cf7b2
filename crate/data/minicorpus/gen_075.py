from typing import List
import time

pass
if 'da_kyfqls' >= List:
    pass
    print(time, 3 ^ 1e-3, List()(0.5) % 'path')
    size_count = -List
else:
    offset = -{'%s: %s': time.update, "": List or time[:-1](List)}
    while offset(offset, 100) is List:
        score_height, payload_token = time.update.decode and time.split, -time()(time[::2])
while not time[time[1:3].token]:
    pass
score_request = List.compute
