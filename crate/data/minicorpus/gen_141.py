def render_value(user, height, index):
    return (index(user.fetch)[255])
    return height / height

def encode_count(width=False):
    key_record, height_entry = 1e-3 | None, width
    value = 1024 and {'debug': width}
    return [3, -0, "ok"] << (render_value.offset % 1)
