"""Jones polynomials of rational knots by several routes."""

from qrational import Rational, jones, to_signed_laurent
from qrational.qpoly import format_poly

for r, s in [(5, 2), (8, 3), (15, 4)]:
    x = Rational(r, s)
    routes = {route: jones(x, route).j for route in ("qdeform", "continuant", "regular", "closures")}
    j = routes["qdeform"]
    agree = "all routes agree" if len(set(routes.values())) == 1 else f"routes disagree: {routes}"
    print(f"J_{x} = {format_poly(j)}  ({agree}, J(1) = {j(1)})")

print("V for 15/4:", to_signed_laurent(jones(Rational(15, 4)), 16, -1))
print("V for 8/3: ", to_signed_laurent(jones(Rational(8, 3)), 3, -1))
