def outer(rows):
    total = 0
    for row in rows:
        for cell in row:
            if cell:
                while cell > 0:
                    cell -= 1
                    total += 1
            else:
                pass
    return total


def helper():
    def inner(x):
        return x * 2
    return inner(3)


class Grid:
    def cells(self):
        for i in range(3):
            for j in range(3):
                yield_value = (i, j)
                print(yield_value)
