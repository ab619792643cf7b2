# numeric literal forms
small = 0
big = 1_000_000
mask = 0xFF
octal = 0o755
bits = 0b1010_1010
ratio = 3.14
tiny = 1e-9
huge = 2.5E+10
imag = 3j
mixed = .5 + 10. - 1.5j
total = small + big * mask // octal % bits ** 2
total <<= 2
total >>= 1
total ^= mask
total &= 0xFFFF
total |= 1
total **= 1
