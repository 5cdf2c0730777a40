"""q-deformed rationals ``[r/s]_q = R(q)/S(q)`` and the machinery around them.

Three independent engines compute the pair ``(R, S)``:

* the three-term recurrence over the negative expansion (the canonical route);
* products of 2x2 matrices of convergents over Laurent polynomials, for both
  expansions;
* q-continuants, i.e. tridiagonal determinants evaluated by recurrence.

The cross identities between them are tested rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .contfrac import (
    CFNegative,
    CFRegular,
    Rational,
    expand_negative,
)
from .errors import DomainError
from .qpoly import ONE, ZERO, LaurentPoly, latex_poly, monomial, q_int, q_int_inv

__all__ = [
    "Mat2",
    "QRational",
    "qdeform",
    "qdeform_neg",
    "qdeform_reg",
    "matrix_neg",
    "matrix_reg",
    "matrix_reg_normalized",
    "generators",
    "continuant_neg",
    "continuant_reg",
    "continuant_block",
    "at_minus_one",
]


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix ``[[a, b], [c, d]]`` over Laurent polynomials."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def scalar(cls, x: LaurentPoly) -> "Mat2":
        return cls(x, ZERO, ZERO, x)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __mul__ = __matmul__

    def scale(self, x: LaurentPoly | int) -> "Mat2":
        return Mat2(self.a * x, self.b * x, self.c * x, self.d * x)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Mat2":
        """Inverse over ``Z[q, q^-1]``; the determinant must be a unit ``±q^k``."""
        inv_det = self.det() ** -1
        return Mat2(self.d * inv_det, -self.b * inv_det, -self.c * inv_det, self.a * inv_det)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Mat2.identity()
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def scalar_value(self) -> LaurentPoly | None:
        """Return ``x`` when the matrix equals ``x * Id``, else ``None``."""
        if self.b.is_zero() and self.c.is_zero() and self.a == self.d:
            return self.a
        return None

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return self.a, self.b, self.c, self.d

    def evaluate(self, x) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return (self.a(x), self.b(x)), (self.c(x), self.d(x))

    def to_json(self) -> dict:
        return {"rows": [[self.a.to_json(), self.b.to_json()], [self.c.to_json(), self.d.to_json()]]}


@dataclass(frozen=True)
class QRational:
    """The q-deformation ``num/den`` of ``value``."""

    num: LaurentPoly
    den: LaurentPoly
    value: Rational

    @property
    def r(self) -> int:
        return self.value.r

    @property
    def s(self) -> int:
        return self.value.s

    def latex(self) -> str:
        return f"\\frac{{{latex_poly(self.num)}}}{{{latex_poly(self.den)}}}"

    def to_json(self) -> dict:
        return {
            "r": str(self.value.r),
            "s": str(self.value.s),
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        }

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


# -- recurrence engine -------------------------------------------------------------


def _neg_coeffs(c: CFNegative | Sequence[int]) -> tuple[int, ...]:
    return c.c if isinstance(c, CFNegative) else tuple(int(x) for x in c)


def _recurrence(c: Sequence[int], first: LaurentPoly, second: LaurentPoly) -> LaurentPoly:
    """Run ``X_{i+1} = [c_{i+1}] X_i - q^{c_i - 1} X_{i-1}`` from ``(X_0, X_1)``."""
    prev, cur = first, second
    for i in range(1, len(c)):
        prev, cur = cur, cur.times_qint(c[i]) - prev.shift(c[i - 1] - 1)
    return cur


def qdeform_neg(c: CFNegative | Sequence[int]) -> QRational:
    """``[[c_1, ..., c_k]]_q`` by the convergent recurrence.

    >>> qdeform_neg(CFNegative((3, 2))).num
    LaurentPoly([1, 2, 1, 1])
    """
    seq = _neg_coeffs(c)
    if not seq:
        raise DomainError("empty negative expansion")
    num = _recurrence(seq, ONE, q_int(seq[0]))
    den = _recurrence(seq, ZERO, ONE)
    r, s = 1, 0
    for ci in reversed(seq):
        r, s = ci * r - s, r
    return QRational(num, den, Rational(r, s))


# -- matrices of convergents ----------------------------------------------------------


def _neg_factor(ci: int) -> Mat2:
    return Mat2(q_int(ci), monomial(ci - 1, -1), ONE, ZERO)


def matrix_neg(c: CFNegative | Sequence[int]) -> Mat2:
    """``M_q(c) = prod [[ [c_i]_q, -q^(c_i - 1) ], [1, 0]]``.

    Entries equal to 1 are accepted so that quiddity sequences can be fed in.
    """
    out = Mat2.identity()
    for ci in _neg_coeffs(c):
        out = out @ _neg_factor(ci)
    return out


def _reg_coeffs(a: CFRegular | Sequence[int]) -> tuple[int, ...]:
    return a.a if isinstance(a, CFRegular) else tuple(int(x) for x in a)


def matrix_reg(a: CFRegular | Sequence[int]) -> Mat2:
    """``M+_q(a)``: alternating factors in ``q`` and ``q^-1``."""
    out = Mat2.identity()
    for i, ai in enumerate(_reg_coeffs(a)):
        if i % 2 == 0:
            out = out @ Mat2(q_int(ai), monomial(ai), ONE, ZERO)
        else:
            out = out @ Mat2(q_int_inv(ai), monomial(-ai), ONE, ZERO)
    return out


def matrix_reg_normalized(a: CFRegular | Sequence[int]) -> Mat2:
    """``q^(a_2 + a_4 + ... + a_2m) * M+_q(a)``, whose entries are polynomials."""
    seq = _reg_coeffs(a)
    return matrix_reg(seq).scale(monomial(sum(seq[1::2])))


def qdeform_reg(a: CFRegular) -> QRational:
    """``[a_1, ..., a_2m]_q`` read off the first column of the normalized matrix.

    >>> qdeform_reg(CFRegular((2, 2))).den
    LaurentPoly([1, 1])
    """
    m = matrix_reg_normalized(a)
    num, den = m.a.shift(-1), m.c.shift(-1)
    r, s = 1, 0
    for ai in reversed(a.a):
        r, s = ai * r + s, r
    return QRational(num, den, Rational(r, s))


_BOUNDARY = {
    (1, 0): (ONE, ZERO),
    (0, 1): (ZERO, ONE),
    (1, 1): (ONE, ONE),
}


def qdeform(x: Rational) -> QRational:
    """Canonical q-deformation of ``x >= 1`` (plus the boundary value ``0/1``).

    >>> qdeform(Rational(5, 2)).num
    LaurentPoly([1, 2, 1, 1])
    """
    key = (x.r, x.s)
    if key in _BOUNDARY:
        num, den = _BOUNDARY[key]
        return QRational(num, den, x)
    if x.s == 0 or x.r < x.s:
        raise DomainError(f"requires r/s ≥ 1; see farey for values below 1 (got {x})")
    return qdeform_neg(expand_negative(x))


def at_minus_one(qr: QRational) -> tuple[int, int]:
    """``(R(-1), S(-1))`` as integers."""
    return int(qr.num(-1)), int(qr.den(-1))


# -- generators ---------------------------------------------------------------------


def generators(kind: str, power: int = 1) -> Mat2:
    """The q-deformed generators ``R_q``, ``L_q`` and ``S_q`` raised to ``power``.

    >>> generators("R", 2) == Mat2(monomial(2), q_int(2), ZERO, ONE)
    True
    """
    kind = kind.upper()
    if kind == "R":
        return Mat2(monomial(power), q_int(power), ZERO, ONE)
    if kind == "L":
        return Mat2(ONE, ZERO, q_int_inv(power), monomial(-power))
    if kind == "S":
        return Mat2(ZERO, monomial(-1, -1), ONE, ZERO) ** power
    raise ValueError(f"unknown generator {kind!r}; expected R, L or S")


# -- q-continuants --------------------------------------------------------------------


def continuant_neg(c: Iterable[int], variable: str = "q") -> LaurentPoly:
    """The q-continuant ``K_k(c_1, ..., c_k)``.

    It is the tridiagonal determinant with ``[c_i]_q`` on the diagonal,
    ``q^(c_i - 1)`` above it and ``1`` below, computed by the recurrence
    ``K_i = [c_i]_q K_{i-1} - q^(c_{i-1} - 1) K_{i-2}``.  The empty continuant
    is 1.  Pass ``variable="q_inverse"`` for the same determinant in ``q^-1``.
    """
    seq = tuple(c)
    if not seq:
        return ONE
    k = _recurrence(seq, ONE, q_int(seq[0]))
    if variable == "q":
        return k
    if variable == "q_inverse":
        return k.invert_variable()
    raise ValueError(f"variable must be 'q' or 'q_inverse', got {variable!r}")


def continuant_reg(a: Iterable[int], first_index: int = 1) -> LaurentPoly:
    """The parity-aware continuant ``K+``.

    The entry with absolute index ``i`` (counted from ``first_index``)
    contributes ``[a_i]_q`` and ``q^(a_i)`` when ``i`` is odd, and
    ``[a_i]_{q^-1}`` and ``q^(-a_i)`` when ``i`` is even.  The subdiagonal is
    ``-1``, so ``D_i = d_i D_{i-1} + u_{i-1} D_{i-2}``.
    """
    seq = tuple(a)
    prev, cur = ZERO, ONE
    up_prev = ZERO
    for j, ai in enumerate(seq):
        idx = first_index + j
        if idx % 2:
            diag, up = q_int(ai), monomial(ai)
        else:
            diag, up = q_int_inv(ai), monomial(-ai)
        prev, cur = cur, diag * cur + up_prev * prev
        up_prev = up
    return cur


def continuant_block(c: Sequence[int], i: int, j: int) -> LaurentPoly:
    """``K_{i,j} = K(c_{i+1}, ..., c_{j-1})`` with 1-based ``c``.

    By convention ``K_{i,i} = 0`` and ``K_{i,i+1} = 1``.
    """
    if j == i:
        return ZERO
    if j == i + 1:
        return ONE
    if j < i:
        raise ValueError("continuant_block needs i <= j")
    return continuant_neg(c[i:j - 1])
