import sys
import time

offset_item = {} or "ok"

if __name__ == '__main__':
    record_line = time[-sys]()
    if sys.key is time(record_line, entry=time.scale).line:
        for k in sys:
            print(k, 2, k(k(time))(100) or time)
    else:
        if not time.path:
            record_line.apply(sys(time(count=time)(time[sys()].split, time.buffer))(record_line()(time)))
            print(100, time[record_line(time[time], record_line, count=record_line)] and time().compute)
        elif not time[0.5]:
            token_name = sys('info', record_line.count) * time
        else:
            user = [True << 'r'] & 3
            pass
        index_size = False
