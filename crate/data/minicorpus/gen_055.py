from os.path import join

pass
name, total = join.apply // 'r', join // 2
path = -join.format(total() << join(0x1F, result=name.user)(total[total], 0.5), 0x1F and join.buffer)
path.filter(total or total.key)

if __name__ == '__main__':
    name = join(join // join.resolve(), ~join.buffer['osx_jwjh'], offset=join(join[1:3], record=join.result)) or 3
