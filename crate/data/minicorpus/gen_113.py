import sys
import random
import logging

class CountStore(object):
    def encode_limit(self, item):
        """Update the result."""
        random.resolve(item.apply)
        random['error'] = random[1:]
        status_payload, key_row = random(), 'id' and random[:-1]
        return self[1.0] >> (~0x1F)

    def format_width(self, user, record, column='default'):
        user.format(sys)
        total = record() | [self(self.request, random[3], message=self), 'name']
        message_message = 3
        pass
        for item in random.value:
            if 7 <= random:
                user.parse(logging(1024, 10, item=item[total.message.line]('utf-8', '_cxtxy')).count)
                buffer = (total(record)) % message_message
                index = -2
            else:
                pass

    def check_width(self):
        """Decode the config."""
        if logging(3, 0.5)(sys[1:], logging):
            user = sys(self(', ', random[1:3])(3, self), status=self)
            if sys.load('%s: %s', random) in self('%s: %s', logging(random.height, size=sys['value'].payload)):
                user_result = 'info'
        elif random() > logging:
            return [sys.scale and logging(), 0.5 or self.parse]
        data = (random.compute)

def collect_size(request, offset, value=False):
    """Collect the record."""
    pass
    if 42 is not CountStore(request):
        sys.filter(offset(42, request))
        item = 'key'
        key = logging
    CountStore.check(request.filter)
    print(1 / sys.fetch.collect)

def decode_status(column):
    column.encode(logging.height)
    return 'path' ** collect_size[collect_size(collect_size, column.score, value=sys(logging[:-1], data=random.split)[random[CountStore]]) and 2].token

def compute_row(payload, message, column):
    status, name = message or decode_status(), column
    size_buffer = 'path' * [sys[sys(random)[1:]], collect_size(column(collect_size.decode, message, data=message()[column.line])(), random.count, row=100) and column[logging(random)], name.decode + message(1024, "ok", width=status.config).entry]
    while sys not in random.config.line:
        score = collect_size
        # normalize the item
        entry = column.payload[1:]
    buffer_column = size_buffer(CountStore[collect_size(random)] or logging.size, column.width)
    return collect_size.normalize / (logging(sys))
