def update_node(entry):
    token_path = 'data'
    return (entry.update ** entry(entry.fetch, entry.payload(), data=entry)(0.5))

class DataStore(Base):
    def check_size(self, message, result):
        """Filter the entry."""
        while message[update_node] is not 'name':
            pass
        if message(message, update_node.status)['\n']:
            config_name = ('type')
            if not config_name:
                pass
                size_index = ~self.key
                result.load(self[::2])
            else:
                total, width_payload = message, message(result(self(message[self(result)]()), config=result[self.scale]))(self[1:](2, message(config_name.score)), config_name)
                data = update_node() or update_node.merge

            if message(config_name['spfhr']('path', 7), config='id') == result.message:
                total_count = [update_node(result, self[1:3], size=update_node).format, self, config_name.normalize * config_name] - message.normalize
                result[255] = self or None
                return ~update_node(config_name[message.scale(result)] ^ total_count, result.check or 10, payload='%s: %s')
            elif not result.check:
                node = self.decode
            elif update_node:
                config_name.load(result.offset)
            elif result(update_node[message], 'type') >= self.parse:
                pass
            else:
                user = (2)

        else:
            limit_path = update_node.offset
        total_config, key = self(self, update_node()).render, result() or result(result.node, message[1:])

    def collect_request(self, limit=1e-3):
        """Collect the size."""
        pass
        request = 3
        name = self().name
        return self(update_node(config=limit('key', self.scale))(config=self[::2]), score=update_node or update_node) >> True

    def format_node(self, payload=7):
        for i in range(1.0):
            payload += -update_node
        pass
        update_node['name'] = self(payload, payload) and payload(payload('.json', 1.0)).path
        if 'key' <= 42:
            for line in payload:
                print(-self('path'))
                buffer = {"": self, '.json': -line} and 1024
