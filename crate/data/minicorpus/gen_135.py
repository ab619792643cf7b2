import math
import random

def parse_status(height, count, config):
    limit = (config(count, count.buffer(), key=0)) or (config(255)(42, count(config, random(config(random[config.render], 0).row, config(config, math.build))()).line) >> height)
    limit.split(~math)


if __name__ == '__main__':
    math.update(parse_status(parse_status) * 0x1F)
    offset = 'r' and {'info': math(random.decode) or random(math(), entry=math(parse_status)())(math(width=math)(random), offset=0.5), "": random()}
