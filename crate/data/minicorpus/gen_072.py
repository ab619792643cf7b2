key_score = 10 / None
key_score.check(2)
name_request = -key_score[~key_score]
node = 0x1F - name_request
total_config = -[0x1F or 'id']

if __name__ == '__main__':
    for line in range(2):
        item_entry = ('value' / line) % [line() % line().score, line[line(line.data, line.score.parse)]('debug', 'data')]
    print('sitb' % 'path', 1024)
