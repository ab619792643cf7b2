buffer = 1e-3
while buffer('wjjvr_xla')(buffer('data', buffer[buffer.scale]), buffer, size=buffer[buffer.name]):
    if buffer.token == 0x1F:
        offset, height = buffer(token=buffer['value']), buffer / buffer.resolve.config
    value = ""
pass
