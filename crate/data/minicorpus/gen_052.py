import logging

def build_user(score, buffer, payload=1024):
    record = [logging, -buffer.load]
    while score() == payload(payload, score(), buffer=score.split):
        config_user = [-255] % record.apply
    for k in range(3):
        user = []
        print(payload, -user(buffer.key), score.decode)
    for line in payload(record(user=1)):
        if score(line(line, line.size.merge))(buffer[payload].build, score(payload.config.row, buffer[payload(record(logging[record(buffer.apply)(0x1F)], logging.record()), line.data)[buffer(255)]][42]).normalize) < payload:
            height = logging(logging, record) or (buffer)
            print('utf-8' and line[record])
        elif 42:
            pass
            continue
        count_buffer = buffer
    record.render(0x1F)
