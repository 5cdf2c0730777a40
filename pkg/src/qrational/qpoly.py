"""Exact dense polynomials and Laurent polynomials in one variable ``q``.

Coefficients are Python integers, so nothing ever overflows.  A single
class, :class:`LaurentPoly`, covers both cases: an ordinary polynomial is a
Laurent polynomial whose ``min_exp`` is nonnegative.  ``IntPoly`` is kept as
an alias so that call sites can say which of the two they mean.

Values are immutable.  The canonical zero has no coefficients and
``min_exp == 0``; every constructor trims zeros at both ends.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalNumber
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, MalformedInputError, NotDivisibleError

__all__ = [
    "LaurentPoly",
    "IntPoly",
    "ZERO",
    "ONE",
    "monomial",
    "q_int",
    "q_int_inv",
    "exact_divide",
    "unimodal",
    "format_poly",
    "latex_poly",
]

# Below this many coefficient products the plain double loop beats numpy.
_SCHOOLBOOK_LIMIT = 400
_INT64_SAFE = 1 << 62


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    if la == 1:
        c = a[0]
        return [c * x for x in b]
    if lb == 1:
        c = b[0]
        return [c * x for x in a]
    if la * lb <= _SCHOOLBOOK_LIMIT:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    ma = max(abs(x) for x in a)
    mb = max(abs(y) for y in b)
    if ma * mb * min(la, lb) < _INT64_SAFE:
        arr = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return [int(v) for v in arr]
    return _kronecker_signed(a, b)


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Multiply polynomials with nonnegative coefficients by packing them into one big integer each."""
    la, lb = len(a), len(b)
    bits = max(a).bit_length() + max(b).bit_length() + min(la, lb).bit_length() + 1
    width = (bits + 7) // 8
    pa = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a), "little")
    pb = int.from_bytes(b"".join(y.to_bytes(width, "little") for y in b), "little")
    n = la + lb - 1
    raw = (pa * pb).to_bytes(n * width, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(n)]


def _kronecker_signed(a: Sequence[int], b: Sequence[int]) -> list[int]:
    ap = [x if x > 0 else 0 for x in a]
    an = [-x if x < 0 else 0 for x in a]
    bp = [y if y > 0 else 0 for y in b]
    bn = [-y if y < 0 else 0 for y in b]
    n = len(a) + len(b) - 1
    out = [0] * n
    for u, v, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if any(u) and any(v):
            for i, c in enumerate(_kronecker(u, v)):
                out[i] += sign * c
    return out


class LaurentPoly:
    """A Laurent polynomial ``sum(coeffs[i] * q**(min_exp + i))``.

    >>> LaurentPoly([1, 1]) * LaurentPoly([1, 1, 1])
    LaurentPoly([1, 2, 2, 1])
    >>> LaurentPoly([1, 1]).shift(-1)
    LaurentPoly([1, 1], min_exp=-1)
    """

    __slots__ = ("min_exp", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        c = [int(x) for x in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.coeffs: tuple[int, ...] = ()
            self.min_exp = 0
        else:
            self.coeffs = tuple(c[lo:hi])
            self.min_exp = int(min_exp) + lo
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _trusted(cls, coeffs: list[int], min_exp: int) -> "LaurentPoly":
        # Same normalisation as __init__ but skips the int() conversion.
        lo = 0
        n = len(coeffs)
        while lo < n and coeffs[lo] == 0:
            lo += 1
        hi = n
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        obj = cls.__new__(cls)
        if lo == hi:
            obj.coeffs = ()
            obj.min_exp = 0
        else:
            obj.coeffs = tuple(coeffs[lo:hi]) if (lo or hi != n) else tuple(coeffs)
            obj.min_exp = min_exp + lo
        obj._hash = None
        return obj

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPoly":
        """Build from ``{exponent: coefficient}``."""
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        dense = [0] * (hi - lo + 1)
        for e, c in terms.items():
            dense[e - lo] += c
        return cls(dense, lo)

    # -- basic properties -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def max_exp(self) -> int | None:
        """Top exponent, or ``None`` for the zero polynomial."""
        if not self.coeffs:
            return None
        return self.min_exp + len(self.coeffs) - 1

    @property
    def degree(self) -> int | None:
        return self.max_exp

    @property
    def valuation(self) -> int | None:
        return self.min_exp if self.coeffs else None

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coefficient(0)

    def is_polynomial(self) -> bool:
        """True when no negative powers of ``q`` occur."""
        return self.min_exp >= 0

    def coefficient(self, k: int) -> int:
        i = k - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def monomial_exponent(self) -> int | None:
        """Return ``e`` if the polynomial is exactly ``q**e``, else ``None``."""
        if len(self.coeffs) == 1 and self.coeffs[0] == 1:
            return self.min_exp
        return None

    def to_list(self) -> list[int]:
        """Dense coefficients of ``q**0, q**1, ...``; needs a genuine polynomial."""
        if not self.coeffs:
            return []
        if self.min_exp < 0:
            raise DomainError(f"{self!r} has negative powers of q")
        return [0] * self.min_exp + list(self.coeffs)

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending order."""
        return [(self.min_exp + i, c) for i, c in enumerate(self.coeffs) if c]

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly._trusted([other], 0)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        out = [0] * (hi - lo)
        off = self.min_exp - lo
        for i, c in enumerate(self.coeffs):
            out[off + i] = c
        off = other.min_exp - lo
        for i, c in enumerate(other.coeffs):
            out[off + i] += c
        return LaurentPoly._trusted(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._trusted([-c for c in self.coeffs], self.min_exp)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._trusted([other * c for c in self.coeffs], self.min_exp)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        return LaurentPoly._trusted(_convolve(self.coeffs, other.coeffs), self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise DomainError("only the units ±q^k have negative powers")
            return monomial(self.min_exp * n, self.coeffs[0] ** n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly._trusted(list(self.coeffs), self.min_exp + k)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``q -> q**-1``."""
        if not self.coeffs:
            return self
        return LaurentPoly._trusted(list(reversed(self.coeffs)), -(self.min_exp + len(self.coeffs) - 1))

    def reversed(self) -> "LaurentPoly":
        """Reverse the coefficient sequence, keeping ``min_exp``."""
        return LaurentPoly._trusted(list(reversed(self.coeffs)), self.min_exp)

    def times_qint(self, a: int) -> "LaurentPoly":
        """Multiply by ``[a]_q`` in linear time with a sliding window sum."""
        if a <= 0 or not self.coeffs:
            return self * q_int(a)
        c = self.coeffs
        n = len(c)
        out = [0] * (n + a - 1)
        run = 0
        for j in range(n + a - 1):
            if j < n:
                run += c[j]
            if j >= a:
                run -= c[j - a]
            out[j] = run
        return LaurentPoly._trusted(out, self.min_exp)

    def evaluate(self, x) -> Fraction:
        """Exact value at a rational point ``x``."""
        if not isinstance(x, (int, Fraction)):
            if isinstance(x, _RationalNumber):
                x = Fraction(x.numerator, x.denominator)
            else:
                raise DomainError(f"evaluation point must be rational, got {x!r}")
        if not self.coeffs:
            return Fraction(0)
        if x == 0:
            if self.min_exp < 0:
                raise DomainError("negative power of q evaluated at q = 0")
            return Fraction(self.coefficient(0))
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * Fraction(x) ** self.min_exp

    __call__ = evaluate

    # -- comparison and hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly._trusted([other], 0)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.min_exp, self.coeffs))
        return self._hash

    # -- text forms -----------------------------------------------------------

    def __repr__(self) -> str:
        if self.min_exp:
            return f"LaurentPoly({list(self.coeffs)}, min_exp={self.min_exp})"
        return f"LaurentPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        try:
            return cls([int(c) for c in data["coeffs"]], int(data.get("min_exp", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad polynomial JSON: {data!r}") from exc


IntPoly = LaurentPoly

ZERO = LaurentPoly()
ONE = LaurentPoly([1])


def monomial(k: int, c: int = 1) -> LaurentPoly:
    """The term ``c * q**k``."""
    return LaurentPoly._trusted([c], k)


def q_int(a: int) -> LaurentPoly:
    """The q-integer ``[a]_q = 1 + q + ... + q**(a-1)``.

    Negative arguments follow ``[a]_q = (1 - q**a) / (1 - q)``, which gives
    ``[-b]_q = -q**-b [b]_q``.
    """
    if a >= 0:
        return LaurentPoly._trusted([1] * a, 0)
    return LaurentPoly._trusted([-1] * (-a), a)


def q_int_inv(a: int) -> LaurentPoly:
    """``[a]_{q^{-1}} = 1 + q**-1 + ... + q**(1-a)``."""
    return q_int(a).invert_variable()


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient of ``num`` by ``den`` in ``Z[q, q^-1]``.

    Raises :class:`NotDivisibleError` carrying the remainder when ``den`` does
    not divide ``num``.

    >>> exact_divide(LaurentPoly([1, 1, 1, 1]), LaurentPoly([1, 1]))
    LaurentPoly([1, 0, 1])
    """
    if not den.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num.coeffs:
        return ZERO
    # den = q^v * d0 with d0(0) != 0, so only d0 needs genuine long division.
    d = den.coeffs
    rem = list(num.coeffs)
    lead = d[-1]
    nq = len(rem) - len(d) + 1
    if nq <= 0:
        raise NotDivisibleError(num)
    quot = [0] * nq
    for i in range(nq - 1, -1, -1):
        top = rem[i + len(d) - 1]
        if top == 0:
            continue
        k, r = divmod(top, lead)
        if r:
            raise NotDivisibleError(LaurentPoly._trusted(rem, num.min_exp))
        quot[i] = k
        for j, dj in enumerate(d):
            rem[i + j] -= k * dj
    if any(rem):
        raise NotDivisibleError(LaurentPoly._trusted(rem, num.min_exp))
    return LaurentPoly._trusted(quot, num.min_exp - den.min_exp)


def unimodal(p: LaurentPoly) -> bool:
    """True when the coefficients rise weakly and then fall weakly."""
    c = p.coeffs
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


def _power_text(e: int, latex: bool, var: str) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    if latex:
        return f"{var}^{{{e}}}"
    return f"{var}^{e}"


def _render(p: LaurentPoly, latex: bool, var: str) -> str:
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for e, c in p.terms():
        mag = abs(c)
        body = _power_text(e, latex, var)
        if not body:
            term = str(mag)
        elif mag == 1:
            term = body
        else:
            term = f"{mag}{body}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        elif latex:
            parts.append(("+" if c > 0 else "-") + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts)


def format_poly(p: LaurentPoly, var: str = "q") -> str:
    """Plain-text rendering in ascending powers, e.g. ``1 + 2q + q^2``."""
    return _render(p, False, var)


def latex_poly(p: LaurentPoly, var: str = "q") -> str:
    """LaTeX rendering in ascending powers, e.g. ``1+2q+q^{2}``."""
    return _render(p, True, var)
