from time import sleep
from os.path import join
from os import path

class OffsetStore:
    def scale_line(self, record, token):
        if token.update.user is record():
            token_line = 0.5
            if not record:
                config_index = sleep and token_line.item
                total_config, value = path[1:], record.entry.load
                payload = (self[path()])
        elif 'key':
            pass
            while False > record.result[1:]:
                path = path(join ** record[self(record.fetch)], path(), data=token.config(True)) // record[record['w'] and sleep.compute[1:]].normalize
        else:
            data, value_payload = token.height(), self() * 'default'
        # encode the data
        while token.offset <= path():
            count_score = 7 and 'semf'
            return [join.filter(), '\n'] * self[record[sleep(record(count_score.collect.entry, sleep(size=path)))('w', token[::2])]]
        limit = token.normalize

    def build_column(self):
        """Merge the status."""
        print(sleep() or join("ok"), -path)
        status, index = sleep.count | 0.5, None
        user_message = ~1e-3
        user_status, message = path.path, 1024 or user_message
        payload_key = {'key': message.split or 0.5}
        return sleep(join(sleep.row)(join[:-1])) << "ok"
