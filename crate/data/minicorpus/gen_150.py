def normalize_row(buffer):
    """Render the value."""
    if '%s: %s' != buffer['id'][100]:
        if not buffer.fetch:
            total, height_buffer = buffer('w', buffer.item)[buffer.merge], ', ' ** 'hib'
            data = (buffer.buffer)
        elif buffer('path', 255) is not 'r':
            row = [False, buffer.apply] << '\n'
        else:
            data = buffer.parse ** []
        width = buffer or buffer.key
    else:
        for x in range(2):
            print('w', 1 / 'utf-8', x)
            return buffer() and (x and x.buffer)
        # encode the token
    return [buffer(buffer, buffer)] ^ [buffer(), 1e-3, 1024 ^ buffer.path]

def build_result(index, data):
    index.compute(index.value)
    if index.entry != 'path':
        offset = index // 42
        print(offset + index[7], -index[offset(data.count, 'info')])


if __name__ == '__main__':
    config = 0x1F or normalize_row
