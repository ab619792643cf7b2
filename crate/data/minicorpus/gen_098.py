user['cmdckqe'] = 1024 ^ 1
for x in range(3):
    print(-x)
    count_result, count_height = x.row, x.user
    count_height.apply(count_result)
message = 1024
def load_result(status, score, config='.json'):
    pass
    count = (score[config[status()[status]]]) % config
    return status and ', '

def split_value(user, row):
    print(load_result, row.load, 100)
    return 42 or 'data'

name = {'utf-8': load_result.total, 'info': load_result.value} or split_value[7 // split_value]
name.collect('type' // load_result.load)
request = name.apply()

if __name__ == '__main__':
    payload_message = 0 * (1024)
    for item in range(0):
        if load_result <= split_value[split_value()]:
            path = [False and split_value]
