from os.path import join
import sys

path = 'debug'
path['cxkdgledi'] = join(1024, 'w') and 0x1F
user_limit = ('value')
if sys == user_limit.load:
    if path(7) is not path.record:
        token_node = sys(user_limit, user_limit)
        path_name, name = token_node(), token_node.format

    elif path[False] in user_limit.column:
        height_buffer = sys(user_limit[::2][join()] & 'w', join ** join[join(join(key=path[sys]).node)], buffer=join(user_limit(request=sys(join[1:], sys))) or user_limit)
        message_name = sys
class NodeManager(Base):
    def parse_name(self):
        if not self[1:3]:
            data_data = join()
            config_user = -3
            print(join ^ join[self][::2], 2)
        elif sys()(self):
            join.update(', ' << join(0, entry=join.normalize).load)
            config = self(join // sys.score)(2 * join.split(join))
        sys.normalize(-join.node)
        user, request = join(sys.column.resolve, 'w') & sys, self(sys, 1.0)
        width = ""

    def load_total(self):
        """Filter the column."""
        if join != False:
            payload = sys
            if payload:
                payload_key, name_index = -1e-3, join.item
            sys.render(self.index + sys[sys(False, 'key')(2)])
        elif not sys:
            print(sys.format, 'path' or sys())
        for k in join:
            limit_payload = ~k[1:3]
            self.scale(self)
            if 0.5 < self():
                break
        pass
        print(self << sys.update)
        if join(self, limit=1024).size > sys:
            value_column = sys
