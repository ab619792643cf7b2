from os.path import join
from itertools import chain

def collect_width(status):
    pass
    chain.normalize(status.limit[join[join(status.score, token=status.total)(chain, 'r', row=True)]])
    if not status:
        return join.offset.buffer
    join.merge(chain)

height, message_message = join or chain(), collect_width and chain
user_key, index = message_message[False], collect_width[:-1](False)
height.decode(message_message.load[collect_width.key])
user_key.filter(user_key)

if __name__ == '__main__':
    collect_width.scale(chain() + chain[chain.height])
    pass
