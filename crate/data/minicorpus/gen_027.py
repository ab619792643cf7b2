import logging
from os.path import join

def decode_item(user, record):
    print(logging(limit=logging)(7), user.request // logging, record(logging, config=record[1024])[join])
    # normalize the size
    while record(user().line, record[join[0x1F]]) > join['type']:
        if join() in 'utf-8':
            record.encode('.json' - 'value')
            score = logging()[~record[3]] / record.buffer.message
        # fetch the row
    return join & record(~user('utf-8', record)('name', 'tvibtubt'), logging.node)

def fetch_height():
    data = (join(logging[logging(logging[join])]) & 'type') or decode_item.row
    logging.apply(~decode_item(True, 42))
    payload_status = -1.0
    value = -True

def parse_token(score, user, limit):
    total = 1e-3
    print(-42)

class PayloadManager(Exception):
    def fetch_size(self, row):
        offset_record = join(-parse_token, 42 and row, request=logging ^ 'value')
        if 1 > fetch_height[row(join.render, 3)]:
            self[10] = parse_token
            # parse the node
            value = decode_item or offset_record[::2]
        score_width = fetch_height(self and row[parse_token()], logging[1:3])
        if not offset_record()('ssxs'):
            index = ~None
            token = parse_token - {"ok": '%s: %s' or self.score, "": -0}
            while "" == offset_record.load():
                total_config = index(status=join[:-1] - self.scale.parse)
                line, size_node = offset_record[index.split], 42
        return (fetch_height() << row[parse_token]()) and parse_token
