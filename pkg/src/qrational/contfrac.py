"""Regular and negative continued fractions of rationals greater than one.

A rational ``r/s > 1`` has two canonical expansions:

* the regular expansion ``[a_1, ..., a_2m]`` with all ``a_i >= 1``, always of
  even length;
* the negative (Hirzebruch-Jung) expansion ``[[c_1, ..., c_k]]`` with all
  ``c_i >= 2``.

They are linked by the run-length rule ``c = (a_1+1, 2^(a_2-1), a_3+2,
2^(a_4-1), ..., a_(2m-1)+2, 2^(a_2m-1))`` where ``2^j`` means ``j`` copies of 2.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, MalformedInputError

__all__ = [
    "Rational",
    "CFRegular",
    "CFNegative",
    "expand_regular",
    "expand_negative",
    "reg_to_neg",
    "neg_to_reg",
    "evaluate_cf",
    "parse_rational",
    "parse_cf",
    "polygon_size",
]


@dataclass(frozen=True, init=False, eq=False)
class Rational:
    """A fraction ``r/s`` in lowest terms with ``r, s >= 0``.

    ``1/0`` is allowed so that the point at infinity can label Farey vertices.
    ``reduced`` records whether the caller's input had a common factor.
    """

    r: int
    s: int
    reduced: bool = False

    def __init__(self, r: int, s: int = 1):
        r, s = int(r), int(s)
        if r < 0 or s < 0:
            raise DomainError(f"negative rationals are not supported: {r}/{s}")
        if r == 0 and s == 0:
            raise DomainError("0/0 is not a rational number")
        g = math.gcd(r, s)
        object.__setattr__(self, "r", r // g)
        object.__setattr__(self, "s", s // g)
        object.__setattr__(self, "reduced", g != 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            return self.r == other.r and self.s == other.s
        if isinstance(other, (int, Fraction)) and self.s:
            return Fraction(self.r, self.s) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.r, self.s))

    def _key(self, other: "Rational") -> tuple[int, int]:
        # Cross multiplication also orders 1/0 above every finite value.
        return self.r * other.s, other.r * self.s

    def __lt__(self, other: "Rational") -> bool:
        a, b = self._key(other)
        return a < b

    def __le__(self, other: "Rational") -> bool:
        a, b = self._key(other)
        return a <= b

    def __gt__(self, other: "Rational") -> bool:
        a, b = self._key(other)
        return a > b

    def __ge__(self, other: "Rational") -> bool:
        a, b = self._key(other)
        return a >= b

    @property
    def is_boundary(self) -> bool:
        """True for the three special values 1/0, 0/1 and 1/1."""
        return (self.r, self.s) in {(1, 0), (0, 1), (1, 1)}

    @property
    def is_infinite(self) -> bool:
        return self.s == 0

    def to_fraction(self) -> Fraction:
        if self.s == 0:
            raise DomainError("1/0 has no finite value")
        return Fraction(self.r, self.s)

    def mediant(self, other: "Rational") -> "Rational":
        return Rational(self.r + other.r, self.s + other.s)

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"

    def __repr__(self) -> str:
        return f"Rational({self.r}, {self.s})"


def _require_above_one(x: Rational) -> None:
    if x.s == 0 or x.r <= x.s:
        raise DomainError(f"requires r/s > 1, got {x}")


@dataclass(frozen=True)
class CFRegular:
    """Regular expansion ``[a_1, ..., a_2m]`` of even length."""

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a or len(a) % 2 or any(x < 1 for x in a):
            raise DomainError(f"a regular expansion needs an even number of positive entries: {list(a)}")

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    @property
    def even_sum(self) -> int:
        """``a_2 + a_4 + ... + a_2m``."""
        return sum(self.a[1::2])

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.a)) + "]"

    def to_json(self) -> dict:
        return {"kind": "regular", "coeffs": list(self.a)}


@dataclass(frozen=True)
class CFNegative:
    """Negative expansion ``[[c_1, ..., c_k]]`` with every ``c_i >= 2``."""

    c: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        if not c or any(x < 2 for x in c):
            raise DomainError(f"a negative expansion needs entries >= 2: {list(c)}")

    def __len__(self) -> int:
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __str__(self) -> str:
        return "[[" + ",".join(map(str, self.c)) + "]]"

    def to_json(self) -> dict:
        return {"kind": "negative", "coeffs": list(self.c)}


def expand_regular(x: Rational) -> CFRegular:
    """Euclid's algorithm, then make the length even.

    When the natural expansion has odd length its last entry ``a_k`` (which is
    at least 2) is split into ``a_k - 1, 1``.

    >>> str(expand_regular(Rational(7, 5)))
    '[1,2,1,1]'
    """
    _require_above_one(x)
    r, s = x.r, x.s
    a: list[int] = []
    while s:
        t, rem = divmod(r, s)
        a.append(t)
        r, s = s, rem
    if len(a) % 2:
        a[-1] -= 1
        a.append(1)
    return CFRegular(tuple(a))


def expand_negative(x: Rational) -> CFNegative:
    """Ceiling version of Euclid: ``c_1 = ceil(r/s)``, then recurse on ``1/(c_1 - r/s)``.

    >>> str(expand_negative(Rational(7, 5)))
    '[[2,2,3]]'
    """
    _require_above_one(x)
    r, s = x.r, x.s
    c: list[int] = []
    while s:
        t = -(-r // s)
        c.append(t)
        r, s = s, t * s - r
    return CFNegative(tuple(c))


def reg_to_neg(a: CFRegular) -> CFNegative:
    """Apply the run-length conversion rule."""
    seq = a.a
    c: list[int] = []
    for i, ai in enumerate(seq):
        if i % 2 == 0:
            c.append(ai + (1 if i == 0 else 2))
        else:
            c.extend([2] * (ai - 1))
    return CFNegative(tuple(c))


def neg_to_reg(c: CFNegative) -> CFRegular:
    """Invert :func:`reg_to_neg` by reading off the runs of 2s."""
    seq = c.c
    a = [seq[0] - 1]
    i = 1
    while True:
        run = 0
        while i < len(seq) and seq[i] == 2:
            run += 1
            i += 1
        a.append(run + 1)
        if i == len(seq):
            break
        a.append(seq[i] - 2)
        i += 1
    return CFRegular(tuple(a))


def evaluate_cf(e: CFRegular | CFNegative) -> Rational:
    """Exact value by back substitution."""
    if isinstance(e, CFRegular):
        num, den = 1, 0
        for ai in reversed(e.a):
            num, den = ai * num + den, num
        return Rational(num, den)
    if isinstance(e, CFNegative):
        num, den = 1, 0
        for ci in reversed(e.c):
            num, den = ci * num - den, num
        return Rational(num, den)
    raise TypeError(f"not a continued fraction: {e!r}")


def polygon_size(e: CFRegular | CFNegative) -> int:
    """Number ``n`` of vertices of the triangulated polygon attached to the expansion."""
    if isinstance(e, CFRegular):
        return sum(e.a) + 2
    return sum(e.c) - len(e.c) + 3


_RATIONAL_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Rational:
    """Parse ``"r/s"`` or ``"r"``; common factors are removed."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise MalformedInputError(f"expected r/s, got {text!r}")
    r = int(m.group(1))
    s = int(m.group(2)) if m.group(2) is not None else 1
    if r == 0 and s == 0:
        raise MalformedInputError("0/0 is not a rational number")
    return Rational(r, s)


def _check_ints(body, text: str) -> None:
    if not isinstance(body, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in body):
        raise MalformedInputError(f"continued fraction entries must be integers: {text!r}")


def parse_cf(text: str) -> CFRegular | CFNegative:
    """Parse ``"[1,2,1,1]"`` (regular) or ``"[[2,2,3]]"`` (negative)."""
    t = text.strip()
    try:
        if t.startswith("[[") and t.endswith("]]"):
            body = json.loads("[" + t[2:-2] + "]")
            _check_ints(body, text)
            return CFNegative(tuple(body))
        if t.startswith("[") and t.endswith("]"):
            body = json.loads(t)
            _check_ints(body, text)
            return CFRegular(tuple(body))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise MalformedInputError(f"cannot parse continued fraction {text!r}") from exc
    raise MalformedInputError(f"expected [a,...] or [[c,...]], got {text!r}")
