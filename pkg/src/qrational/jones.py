"""Normalized Jones polynomials of rational (two-bridge) knots.

For ``r/s > 1`` the normalized polynomial is ``J_{r/s} = R - q S`` where
``R/S = [(r+s)/s]_q``.  It is computed here by several independent routes:

* ``"qdeform"``: the definition above;
* ``"continuant"``: ``K(c_1+1, c_2, ..., c_k) - q K(c_2, ..., c_k)`` over the
  negative expansion of ``r/s``;
* ``"regular"``: the same identity written with parity-aware continuants of
  the regular expansion;
* ``"closures"``: closure counting on two path graphs (see :mod:`closures`).

The classical Jones polynomial is recovered as ``V(t) = ±t^p J(-1/t)``;
the sign and ``p`` are not determined by ``J`` and must be supplied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closures import build_graph, enumerate_closures, jones_closure_counts, specialize_gf
from .contfrac import Rational, expand_negative, expand_regular
from .errors import DomainError
from .qpoly import LaurentPoly, format_poly, latex_poly, monomial, q_int
from .qrat import continuant_neg, continuant_reg, qdeform

__all__ = [
    "JonesPoly",
    "SignedLaurent",
    "jones_polynomial",
    "jones_via_continuant",
    "jones_via_regular",
    "jones_via_closures",
    "jones",
    "to_signed_laurent",
    "from_signed_laurent",
]


@dataclass(frozen=True)
class JonesPoly:
    j: LaurentPoly
    knot_fraction: Rational

    def to_json(self) -> dict:
        return {"knot": str(self.knot_fraction), "j": self.j.to_json()}


def _check(x: Rational) -> None:
    if x.s == 0 or x.r <= x.s:
        raise DomainError(f"rational knots are parametrized here by r/s > 1, got {x}")


def jones_polynomial(x: Rational) -> JonesPoly:
    """``R - qS`` for ``R/S = [(r+s)/s]_q``.

    >>> jones_polynomial(Rational(8, 3)).j
    LaurentPoly([1, 1, 2, 1, 2, 1])
    """
    _check(x)
    qr = qdeform(Rational(x.r + x.s, x.s))
    return JonesPoly(qr.num - qr.den.shift(1), x)


def jones_via_continuant(x: Rational) -> JonesPoly:
    """``K_k(c_1+1, c_2, ..., c_k) - q K_(k-1)(c_2, ..., c_k)`` with ``[[c_1, ..., c_k]] = r/s``."""
    _check(x)
    c = expand_negative(x).c
    j = continuant_neg((c[0] + 1,) + c[1:]) - continuant_neg(c[1:]).shift(1)
    return JonesPoly(j, x)


def jones_via_regular(x: Rational) -> JonesPoly:
    """The regular-expansion form.

    With ``[a_1, ..., a_2m] = r/s`` this is ``q^(a_2+...+a_2m - 1)`` times the
    parity-aware tridiagonal determinant whose first diagonal entry is
    ``[a_1+1]_q - q`` and whose first superdiagonal entry is ``q^(a_1+1)``;
    the remaining entries are those of ``K+``.  Expanding along the first row
    gives ``([a_1+1] - q) K+(a_2..) + q^(a_1+1) K+(a_3..)``.
    """
    _check(x)
    a = expand_regular(x).a
    first = q_int(a[0] + 1) - monomial(1)
    body = first * continuant_reg(a[1:], first_index=2) + monomial(a[0] + 1) * continuant_reg(a[2:], first_index=3)
    return JonesPoly(body.shift(sum(a[1::2]) - 1), x)


def jones_via_closures(x: Rational, method: str = "jones_graph") -> JonesPoly:
    """Closure-counting routes.

    ``method="jones_graph"`` counts closures of :func:`closures.jones_graph`
    that contain both or neither of its first two vertices.
    ``method="weighted"`` sums ``q^(2 [v_1 in C] + |C \\ {v_1}|)`` over the
    closures ``C`` of ``G_{r/s}``, i.e. specializes the closure generating
    function at weights ``(2, 1, ..., 1)``.
    """
    _check(x)
    a = expand_regular(x).a
    if method == "jones_graph":
        return JonesPoly(LaurentPoly(jones_closure_counts(a)), x)
    if method == "weighted":
        g = build_graph(a)
        weights = [2] + [1] * (g.vertex_count - 1)
        return JonesPoly(specialize_gf(enumerate_closures(g), weights), x)
    raise ValueError(f"unknown closure method {method!r}")


def jones(x: Rational, route: str = "auto") -> JonesPoly:
    """Dispatch on ``route``: ``auto`` (definition), ``continuant``, ``regular`` or ``closures``."""
    if route in ("auto", "qdeform"):
        return jones_polynomial(x)
    if route == "continuant":
        return jones_via_continuant(x)
    if route == "regular":
        return jones_via_regular(x)
    if route == "closures":
        return jones_via_closures(x)
    raise ValueError(f"unknown route {route!r}")


@dataclass(frozen=True)
class SignedLaurent:
    """``sign * t^(p_halves/2) * J(-t^-1)``, stored exactly.

    ``coeffs`` is the expanded polynomial in ``u = t^(1/2)``, so the term
    ``c u^e`` means ``c t^(e/2)``.  ``half_exponents`` and ``sign`` record the
    normalization that produced it.
    """

    coeffs: LaurentPoly
    half_exponents: int
    sign: int

    def coefficient(self, doubled_exponent: int) -> int:
        return self.coeffs.coefficient(doubled_exponent)

    def __str__(self) -> str:
        if self.coeffs.is_zero():
            return "0"
        parts = []
        for e2, c in sorted(self.coeffs.terms(), reverse=True):
            if e2 % 2:
                power = f"t^({e2}/2)"
            elif e2 == 0:
                power = ""
            elif e2 == 2:
                power = "t"
            else:
                power = f"t^{e2 // 2}"
            mag = abs(c)
            body = power if (mag == 1 and power) else f"{mag}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)


def to_signed_laurent(j: JonesPoly | LaurentPoly, p_halves: int, sign: int) -> SignedLaurent:
    """``sign * t^(p_halves/2) * J(-1/t)``.

    >>> str(to_signed_laurent(LaurentPoly([1, 1]), 2, 1))
    't - 1'
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    poly = j.j if isinstance(j, JonesPoly) else j
    # q^e becomes (-1)^e t^(-e), i.e. u^(-2e) with u = t^(1/2).
    terms = {p_halves - 2 * e: sign * c * (-1 if e % 2 else 1) for e, c in poly.terms()}
    return SignedLaurent(LaurentPoly.from_dict(terms), p_halves, sign)


def from_signed_laurent(v: SignedLaurent) -> LaurentPoly:
    """Recover ``J`` from ``V``; the inverse of :func:`to_signed_laurent`."""
    out = {}
    for e2, c in v.coeffs.terms():
        diff = v.half_exponents - e2
        if diff % 2:
            raise DomainError("exponent parity does not match the stored power of t")
        e = diff // 2
        out[e] = v.sign * c * (-1 if e % 2 else 1)
    return LaurentPoly.from_dict(out)


def jones_text(jp: JonesPoly, latex: bool = False) -> str:
    return latex_poly(jp.j) if latex else format_poly(jp.j)
