a = 10
b = 3
c = a + b - a * b / b // 2 % 5
d = a ** 2
e = ~a & b | a ^ b
f = a << 2 >> 1
g = a == b or a != b
h = a < b and a > b
k = a <= b or a >= b
m = -a + +b
n = not a
p = a is None or b is not None
q = a in [1, 2] or b not in (3, 4)
a += 1; b -= 1; c *= 2
d /= 2; d //= 2; d %= 3
r = [x for x in range(3)]
s = {1, 2, 3}
t = s[0] if s else None
