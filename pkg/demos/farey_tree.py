"""Grow the weighted Farey tree and compare neighbouring labels."""

from qrational import Rational, farey_tree, neighbor_weight, positivity_diff
from qrational.qpoly import format_poly

for entry in farey_tree(3):
    node = entry.node
    edge = "" if entry.ell is None else f"  (weight q^{entry.ell - 1} from {entry.left}, q^{entry.ell} from {entry.right})"
    print(f"{'  ' * entry.depth}{node.value}: ({format_poly(node.label.num)}) / ({format_poly(node.label.den)}){edge}")

# Crossing differences are positive; for Farey neighbours they collapse to a monomial.
print()
for x, y in [(Rational(5, 2), Rational(5, 3)), (Rational(5, 2), Rational(2, 1)), (Rational(3, 2), Rational(7, 5))]:
    diff = positivity_diff(x, y)
    note = f", neighbours with weight {neighbor_weight(x, y)}" if x.r * y.s - x.s * y.r == 1 else ""
    print(f"R_x S_y - S_x R_y for x = {x}, y = {y}: {format_poly(diff)}{note}")
