"""q-Fibonacci and q-Pell polynomials and their coefficient triangles.

Both families are defined through q-deformed convergents:

* ``Ft_{n+1} / F_n = [F_{n+1} / F_n]_q`` for consecutive Fibonacci numbers;
* ``P_{n+1} / Pt_n = [P_{n+1} / P_n]_q`` for consecutive Pell numbers, i.e. the
  convergents ``2/1, 5/2, 12/5, 29/12, ...`` of ``[2, 2, 2, ...]``.

``Ft`` and ``Pt`` are the mirror images (reversed coefficient rows) of ``F``
and ``P``.  The short linear recurrences between consecutive terms are
checked in the test suite rather than used here, because their stated
starting indices do not match the coefficient triangles.
"""

from __future__ import annotations

import csv
import io
import json
from functools import lru_cache
from typing import Literal

from .contfrac import Rational
from .qpoly import LaurentPoly
from .qrat import qdeform

__all__ = [
    "fibonacci",
    "pell",
    "q_fibonacci",
    "q_pell",
    "triangle_rows",
    "rows_to_csv",
    "rows_to_json",
    "rows_to_bfile",
]

Kind = Literal["fib", "fib_mirror", "pell", "pell_mirror"]


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """Classical Fibonacci numbers with ``F_0 = 0``, ``F_1 = 1``."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def pell(n: int) -> int:
    """Classical Pell numbers with ``P_0 = 0``, ``P_1 = 1``."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


@lru_cache(maxsize=None)
def _fib_ratio(n: int):
    # [F_{n+1}/F_n]_q for n >= 1; n = 0 is the boundary value 1/0.
    return qdeform(Rational(fibonacci(n + 1), fibonacci(n)))


def q_fibonacci(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """``(F_n, Ft_n)`` for ``n >= 1``.

    ``F_n`` is the denominator of ``[F_{n+1}/F_n]_q`` and ``Ft_n`` the
    numerator of ``[F_n/F_{n-1}]_q`` (with ``[1/0]_q = 1/0``).

    >>> q_fibonacci(5)[0]
    LaurentPoly([1, 2, 1, 1])
    """
    if n < 1:
        raise ValueError("q_fibonacci is indexed from 1")
    return _fib_ratio(n).den, _fib_ratio(n - 1).num


@lru_cache(maxsize=None)
def _pell_ratio(n: int):
    # [P_{n+1}/P_n]_q; n = 0 is 1/0.
    return qdeform(Rational(pell(n + 1), pell(n)))


def q_pell(n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """``(P_n, Pt_n)`` for ``n >= 1``.

    ``P_n`` is the numerator of ``[P_n/P_(n-1)]_q`` and ``Pt_n`` the
    denominator of ``[P_(n+1)/P_n]_q``.

    >>> q_pell(4)[0]
    LaurentPoly([1, 2, 3, 3, 2, 1])
    """
    if n < 1:
        raise ValueError("q_pell is indexed from 1")
    return _pell_ratio(n - 1).num, _pell_ratio(n).den


def triangle_rows(kind: Kind, max_row: int) -> list[list[int]]:
    """Coefficient rows ``1..max_row`` of one of the four triangles.

    Row ``i`` of the Fibonacci triangles holds ``F_(i+1)`` (resp. ``Ft_(i+1)``);
    row ``i`` of the Pell triangles holds ``P_i`` (resp. ``Pt_i``).  Row sums
    are Fibonacci resp. Pell numbers.
    """
    if max_row < 1:
        raise ValueError("max_row must be at least 1")
    rows = []
    for i in range(1, max_row + 1):
        if kind == "fib":
            p = q_fibonacci(i + 1)[0]
        elif kind == "fib_mirror":
            p = q_fibonacci(i + 1)[1]
        elif kind == "pell":
            p = q_pell(i)[0]
        elif kind == "pell_mirror":
            p = q_pell(i)[1]
        else:
            raise ValueError(f"unknown triangle {kind!r}")
        rows.append(p.to_list())
    return rows


def rows_to_csv(rows: list[list[int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row", "k", "coefficient"])
    for i, row in enumerate(rows, start=1):
        for k, c in enumerate(row):
            writer.writerow([i, k, c])
    return buf.getvalue()


def rows_to_json(rows: list[list[int]]) -> str:
    return json.dumps({"rows": [[str(c) for c in row] for row in rows]})


def rows_to_bfile(rows: list[list[int]], offset: int = 1) -> str:
    """OEIS b-file: one ``index value`` line per entry, reading the triangle by rows."""
    lines = []
    idx = offset
    for row in rows:
        for c in row:
            lines.append(f"{idx} {c}")
            idx += 1
    return "\n".join(lines) + "\n"

