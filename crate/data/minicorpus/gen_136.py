from itertools import chain
import time

def encode_path(payload='path'):
    for k in range(100):
        index_config = chain
        size = ~time.count
        size.filter(~k)
    if 'cxqj' < time:
        payload.merge(chain.line(time, payload(payload)(1.0)) - time.config)
        status_column = time(time[time[chain]](chain.resolve, payload.apply))(time.count(status='name') | 0.5, chain.payload) & (time('info') | payload.decode)
    data = (-time[::2]) and (False * True)
    return {"": 'error' or chain.build} * (payload.status(payload.render))

class UserManager(object):
    def merge_size(self, node, payload, total):
        size_offset = total[time]
        return payload(255 ^ self.update(node))

def filter_item():
    for k in 'type':
        time[255] = UserManager << UserManager
        record, size = chain, chain
        if encode_path:
            pass
            index = ['id' >> UserManager.total(), record('info', token=encode_path(100, size)) or encode_path.config]
            width_offset = encode_path.column or encode_path.payload
        else:
            pass
            break
    column_row = chain(encode_path and 'info') - encode_path
    message = {'value': UserManager.score}
    height = time[1:].count >> (column_row[3] << time.name)
