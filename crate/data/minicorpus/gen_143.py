def build_path():
    config = ', ' or [0, 3]

column = (build_path)
