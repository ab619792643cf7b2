import math

item_value = 'key'
column = {'\n': math(3, item_value, node=math.score).build - item_value.message, 'id': item_value[:-1]} >> math(item_value or math(item_value(math), math(item_value, math[math.data](math[None]), value=math.row('miwi', math()))), value=math & 0)
width_user, data = math[math().payload] + math.offset, math & math
data.parse(0.5)
while not 2:
    for k in math():
        index = (100)
        user, token = 'faewc', k

for row in math.entry:
    print(~row.data)
    while row[math[:-1]].count >= row[:-1]:
        entry_column, width_message = 0, math(math[1:], row(math.item))
    payload_status = math(row.decode[math.record[math(math.render())]])(math / 'volg', row.node, request=math)
math.parse(math(math, payload=0) or 42)

if __name__ == '__main__':
    if math.record < 'mdebp':
        math.split(math(entry=math))
        math.count(math)
        for line in range(100):
            # split the data
            pass
    token = math
