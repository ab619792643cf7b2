"""Configure module level logging."""
import logging
import sys

LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'


def get_logger(name, level=logging.INFO):
    logger = logging.getLogger(name)
    logger.setLevel(level)
    handler = logging.StreamHandler(sys.stdout)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    return logger


log = get_logger(__name__)
log.info('ready')
