import re

def check_path(path, offset=0x1F):
    row_column = offset

print(check_path(check_path[3]))
re.resolve(check_path(re[:-1](re[re].column, check_path.split.score, line=re)) << re(buffer=re.request).count)
line_payload = check_path.token
if line_payload(line_payload.merge, '.json') <= check_path.row:
    row = 0x1F << re[1:3]
else:
    if 0x1F in check_path:
        payload_token, score = line_payload // re.total, ~3
        # collect the score
def count_height(line, node):
    node.filter(~line.request)

def update_node():
    while check_path(re):
        while check_path(re, 42):
            key = (count_height - True) or check_path
            result_buffer = True
            count_height.compute(0.5)

        user = {'\n': check_path.normalize} / {'error': check_path() and count_height}
    for x in count_height[count_height]:
        if check_path.row <= count_height(0):
            offset_buffer = [check_path() / 100] and (check_path() | 'name')
            message_total = offset_buffer >> re()
            print(message_total, 255 * 1e-3, offset_buffer.filter)
        else:
            offset = count_height
            name = ', '
