"""Deform a few rationals and look at them from several angles."""

from qrational import Rational, expand_negative, expand_regular, matrix_neg, qdeform
from qrational.qpoly import format_poly

for r, s in [(5, 2), (7, 5), (25, 11), (9, 7)]:
    x = Rational(r, s)
    qr = qdeform(x)
    print(f"{x}: regular {expand_regular(x)}, negative {expand_negative(x)}")
    print(f"  [{x}]_q = {qr}")
    print(f"  at q = 1: {qr.num(1)}/{qr.den(1)}, at q = -1: {qr.num(-1)}/{qr.den(-1)}")

# The numerator and denominator sit in the first column of the matrix of convergents.
m = matrix_neg(expand_negative(Rational(7, 5)))
print("\nM_q for 7/5:")
for row in ((m.a, m.b), (m.c, m.d)):
    print("  " + " | ".join(format_poly(p) for p in row))
print("  det =", format_poly(m.det()))
