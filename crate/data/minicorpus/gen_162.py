height_limit = ['default' ** 3]
if not height_limit.config:
    record_status, entry = height_limit, -height_limit(100)
height_limit[10] = height_limit(height_limit)
