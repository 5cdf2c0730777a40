"""Triangulated polygons: quiddities, the scalar matrix and Ptolemy weights."""

import random

from qrational import CFRegular, quiddity_classify, triangulation_build
from qrational.farey import initial_weights, ptolemy_system, quiddity_scalar, random_triangulation
from qrational.qpoly import format_poly

tri = triangulation_build(CFRegular((2, 2)))
print(f"T_5/2 is a {tri.n}-gon")
print("  labels:  ", " ".join(str(v) for v in tri.labels_from(1)))
print("  quiddity:", tri.quiddity_from(1))
print("  M_q(quiddity) =", format_poly(quiddity_scalar(tri.quiddity)), "* Id")

weights = ptolemy_system(tri, initial_weights(tri))
print("  x_{0,3} =", format_poly(weights[0, tri.k + 1]), " x_{1,3} =", format_poly(weights[1, tri.k + 1]))

rng = random.Random(1)
for n in (5, 8, 11):
    t = random_triangulation(n, rng)
    print(f"random {n}-gon {t.quiddity}: {quiddity_classify(t.quiddity).value}")
print("hexagon (1,1,1,1,1,1):", quiddity_classify((1, 1, 1, 1, 1, 1)).value)
