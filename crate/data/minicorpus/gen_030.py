import random

class MessageStore(Base):
    """Message helper."""
    def normalize_height(self):
        token_limit = (self() + self[1.0])
        return (-random.buffer)
        return 42

    def collect_path(self, token, node, message):
        # load the result
        token.compute(None)
        print(-random, ~message)
        return 'info' or 2


if __name__ == '__main__':
    pass
    random[0] = MessageStore[1:] << MessageStore.apply
