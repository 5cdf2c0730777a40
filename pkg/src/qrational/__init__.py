"""Exact q-deformed rational numbers.

The q-deformation of a rational ``r/s > 1`` is a ratio ``R(q)/S(q)`` of
integer polynomials with ``R(1) = r`` and ``S(1) = s``.  This package
computes it through continued fractions, matrices of convergents and
q-continuants, and builds the surrounding combinatorics on top: the
weighted Farey graph, triangulated polygons with their quiddities and
Ptolemy weights, closures of oriented path graphs, q-Fibonacci and q-Pell
polynomials, and Jones polynomials of rational knots.

>>> from qrational import Rational, qdeform
>>> print(qdeform(Rational(5, 2)))
(1 + 2q + q^2 + q^3) / (1 + q)
"""

from .closures import (
    ClosureGF,
    QuiverPath,
    build_graph,
    build_graph_prime,
    closure_counts,
    closure_polynomial,
    enumerate_closures,
    jones_closure_counts,
    jones_graph,
    specialize_gf,
)
from .contfrac import (
    CFNegative,
    CFRegular,
    Rational,
    evaluate_cf,
    expand_negative,
    expand_regular,
    neg_to_reg,
    parse_cf,
    parse_rational,
    reg_to_neg,
)
from .errors import CapacityError, DomainError, MalformedInputError, NotDivisibleError, QRationalError
from .farey import (
    FareyNode,
    PtolemyWeights,
    QuiddityClass,
    Triangulation,
    farey_tree,
    neighbor_weight,
    positivity_diff,
    ptolemy_solve,
    quiddity_classify,
    surgery_break,
    surgery_insert,
    triangulation_build,
    weighted_mediant,
)
from .jones import JonesPoly, SignedLaurent, jones, jones_polynomial, jones_via_closures, jones_via_continuant, to_signed_laurent
from .qpoly import IntPoly, LaurentPoly, exact_divide, monomial, q_int, unimodal
from .qrat import (
    Mat2,
    QRational,
    continuant_neg,
    continuant_reg,
    generators,
    matrix_neg,
    matrix_reg,
    qdeform,
    qdeform_neg,
    qdeform_reg,
)
from .sequences import q_fibonacci, q_pell, triangle_rows

__version__ = "0.1.0"

__all__ = [
    "build_graph",
    "build_graph_prime",
    "CapacityError",
    "CFNegative",
    "CFRegular",
    "closure_counts",
    "closure_polynomial",
    "ClosureGF",
    "continuant_neg",
    "continuant_reg",
    "DomainError",
    "enumerate_closures",
    "evaluate_cf",
    "exact_divide",
    "expand_negative",
    "expand_regular",
    "farey_tree",
    "FareyNode",
    "generators",
    "IntPoly",
    "jones",
    "jones_closure_counts",
    "jones_graph",
    "jones_polynomial",
    "jones_via_closures",
    "jones_via_continuant",
    "JonesPoly",
    "LaurentPoly",
    "MalformedInputError",
    "Mat2",
    "matrix_neg",
    "matrix_reg",
    "monomial",
    "neg_to_reg",
    "neighbor_weight",
    "NotDivisibleError",
    "parse_cf",
    "parse_rational",
    "positivity_diff",
    "ptolemy_solve",
    "PtolemyWeights",
    "q_fibonacci",
    "q_int",
    "q_pell",
    "qdeform",
    "qdeform_neg",
    "qdeform_reg",
    "QRational",
    "QRationalError",
    "quiddity_classify",
    "QuiddityClass",
    "QuiverPath",
    "Rational",
    "reg_to_neg",
    "SignedLaurent",
    "specialize_gf",
    "surgery_break",
    "surgery_insert",
    "to_signed_laurent",
    "triangle_rows",
    "Triangulation",
    "triangulation_build",
    "unimodal",
    "weighted_mediant",
]
