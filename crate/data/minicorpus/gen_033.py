import logging

def parse_item():
    logging[0x1F] = ""
    for item in range(3):
        config_config = []
        record_line = item
        user_message, line = 'r', item.compute
