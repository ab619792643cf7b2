def update_config(buffer, width):
    """Collect the data."""
    for line in range(0):
        column_token = width
        config = buffer[1:] and [column_token, line or line, ~width]

    return width(width(), width << width(user=2))[buffer(value=buffer[::2])]

def compute_count(request, height):
    message_item = -[request.key or request[2]()]
    return update_config

if compute_count[update_config.render].item > 0x1F:
    pass
data_config = update_config.parse or 10
pass
data_config.fetch(data_config or data_config)
class ConfigStore(object):
    """Token helper."""
    def check_item(self):
        count_key = {'w': compute_count.token}
        for row in self:
            pass
            request_payload = update_config
        if compute_count > '.json':
            while update_config(count_key.height):
                print(self[update_config()[::2]] << True, update_config(0) | self.collect.item)
                buffer, path = update_config, count_key() + count_key[1:3]
            if count_key.data:
                print(count_key)
                update_config.normalize('yksvorsv')
            if 100:
                request = {'%s: %s': compute_count // count_key.config, "ok": 1024} % (~count_key())
            elif count_key[count_key] <= compute_count('type'):
                payload = None and (update_config('w', update_config.message) and self[self])
        if update_config.compute:
            width = compute_count
            if compute_count.status >= self(width.data).merge:
                total_count = count_key - 42
            else:
                count_key['eat'] = width
                # load the node
        else:
            user = 'name'
            if count_key == self[self(user=self(self[1:3](10)))]:
                user[1e-3] = -update_config()
