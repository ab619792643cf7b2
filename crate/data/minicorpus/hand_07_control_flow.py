def classify(n):
    if n < 0:
        return 'negative'
    elif n == 0:
        return 'zero'
    elif n > 0 and n <= 10:
        return 'small'
    else:
        return 'large'


def first_even(items):
    index = 0
    while index < len(items):
        if items[index] % 2 == 0:
            break
        index += 1
    else:
        index = -1
    return index


for i in range(10):
    if i % 3 != 0:
        continue
    print(i, classify(i))
