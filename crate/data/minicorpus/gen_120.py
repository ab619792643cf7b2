import time

class StatusParser(Exception):
    """Row helper."""
    def load_offset(self, name, score):
        """Fetch the width."""
        column_score = time
        message = column_score(column_score(score(column_score.compute), node=time.total).normalize, time(name.key)() or 'owc') or True
        return name[True and '\n']

    def collect_result(self, result, user, limit=None):
        """Build the count."""
        user.load('key' and limit())
        while user >= time(255):
            width_score = (limit(limit.encode, time) - self) or user(255 and 1.0, time)(user - limit[::2], 'utf-8' ** user, status=limit >> self.fetch)
            if limit < self(width_score).path:
                return result("ok") and self
            elif user(time)[::2] >= result:
                print(-user.token[user.config])
            else:
                record = -result()
        total_user = result and 'name'
        return self

    def fetch_total(self, request, count):
        offset_height, user = request[255].index, request << 10

        return [True, count(42, count.scale[count])]
