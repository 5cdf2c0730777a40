"""Executable checks of the structural identities, grouped into suites.

Each suite sweeps a bounded range of inputs (plus a seeded random sample
where the input space is too large to sweep) and collects every mismatch.
The suites back the ``verify`` CLI command; the conjecture scans back
``conjectures`` and never fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Callable, Iterator

from .closures import directions_to_cf, sweep_paths
from .contfrac import Rational, expand_negative, expand_regular
from .errors import NotDivisibleError
from .farey import (
    QuiddityClass,
    fan_diagonal,
    fan_polygon,
    farey_tree,
    initial_weights,
    neighbor_weight,
    positivity_diff,
    ptolemy_solve,
    ptolemy_system,
    ptolemy_violations,
    quiddity_classify,
    quiddity_scalar,
    random_triangulation,
    surgery_break,
    surgery_insert,
    triangulation_build,
)
from .jones import jones_polynomial, jones_via_closures, jones_via_continuant, jones_via_regular
from .qpoly import LaurentPoly, exact_divide, monomial, q_int, unimodal
from .qrat import (
    Mat2,
    continuant_block,
    continuant_neg,
    continuant_reg,
    generators,
    matrix_neg,
    matrix_reg,
    matrix_reg_normalized,
    qdeform,
    qdeform_neg,
    qdeform_reg,
)
from .sequences import fibonacci, pell, q_fibonacci, q_pell

__all__ = ["VerifyReport", "SUITES", "DEFAULT_BOUNDS", "run_suite", "run_suites", "conjecture_report", "coprime_pairs", "DECAGON"]


@dataclass
class VerifyReport:
    suite: str
    bounds: dict
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, case, expected=None, actual=None) -> None:
        self.cases += 1
        if not ok:
            self.failures.append({"input": str(case), "expected": str(expected), "actual": str(actual)})

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "cases": self.cases,
            "failures": self.failures,
            "wall_time": round(self.wall_time, 3),
            "passed": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {len(self.failures)} failures, {self.wall_time:.2f}s {self.bounds}"


def coprime_pairs(max_sum: int) -> Iterator[Rational]:
    """Every ``r/s > 1`` in lowest terms with ``r + s <= max_sum``, ordered by ``r + s``."""
    for total in range(3, max_sum + 1):
        for s in range(1, (total + 1) // 2):
            r = total - s
            if gcd(r, s) == 1:
                yield Rational(r, s)


def _random_neg_sequence(rng: random.Random, lo: int = 2, hi: int = 6, max_len: int = 10) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(rng.randint(1, max_len)))


# -- suites ------------------------------------------------------------------------------------


def _equality(rep: VerifyReport, max_sum: int, **_) -> None:
    for x in coprime_pairs(max_sum):
        a = qdeform_neg(expand_negative(x))
        b = qdeform_reg(expand_regular(x))
        rep.check(a.num == b.num and a.den == b.den, x, (a.num, a.den), (b.num, b.den))


def _degrees(rep: VerifyReport, max_sum: int, **_) -> None:
    for x in coprime_pairs(max_sum):
        qr = qdeform(x)
        a = expand_regular(x).a
        c = expand_negative(x).c
        ok = (
            qr.num.degree == sum(a) - 1 == sum(c) - len(c)
            and qr.den.degree == sum(a[1:]) - 1 == sum(c[1:]) - len(c) + 1
            and qr.num.constant_term == qr.den.constant_term == 1
            and qr.num.leading_coefficient == qr.den.leading_coefficient == 1
            and qr.num(1) == x.r
            and qr.den(1) == x.s
            and all(v > 0 for v in qr.num.to_list() + qr.den.to_list())
        )
        rep.check(ok, x, "degree/constant/leading/positivity", (qr.num, qr.den))


def _qminus1(rep: VerifyReport, max_sum: int, **_) -> None:
    for x in coprime_pairs(max_sum):
        qr = qdeform(x)
        rv, sv = qr.num(-1), qr.den(-1)
        ok = rv in (-1, 0, 1) and sv in (-1, 0, 1) and (rv == 0) == (x.r % 2 == 0) and (sv == 0) == (x.s % 2 == 0)
        if ok and x.r % 2 == 0:
            try:
                exact_divide(qr.num, LaurentPoly([1, 1]))
            except NotDivisibleError:
                ok = False
        rep.check(ok, x, "values in {-1,0,1}, zero iff even", (rv, sv))


def _positivity_domain(max_sum: int) -> list[Rational]:
    xs = [Rational(1, 0), Rational(0, 1), Rational(1, 1)] + list(coprime_pairs(max_sum))
    return sorted(xs)


def _positivity(rep: VerifyReport, max_sum: int, **_) -> None:
    xs = _positivity_domain(max_sum)
    for y, x in combinations(xs, 2):
        diff = positivity_diff(x, y)
        det = x.r * y.s - x.s * y.r
        nonneg = all(v >= 0 for v in diff.to_list())
        alpha = diff.monomial_exponent() if diff.leading_coefficient == 1 else None
        ok = nonneg and diff(1) == det and ((alpha is not None) == (det == 1))
        if ok and det == 1:
            ok = alpha == neighbor_weight(x, y)
        rep.check(ok, (str(x), str(y)), f"nonnegative, monomial iff det 1 (det={det})", diff)


def _mediant(rep: VerifyReport, depth: int, **_) -> None:
    for entry in farey_tree(depth):
        node = entry.node
        qr = qdeform(node.value)
        rep.check(node.label.num == qr.num and node.label.den == qr.den, node.value, (qr.num, qr.den), (node.label.num, node.label.den))


def _closures(rep: VerifyReport, max_a_sum: int, **_) -> None:
    # G_{r/s} has sum(a) - 1 vertices; every direction string is some G.
    counts: dict[tuple[str, ...], list[int]] = {}
    for dirs, cnt in sweep_paths(max(max_a_sum - 1, 1)):
        counts[dirs] = cnt
    for dirs, cnt in counts.items():
        a = directions_to_cf(dirs)
        qr = qdeform_reg(a)
        num_ok = LaurentPoly(cnt) == qr.num
        prime_len = len(dirs) + 1 - a.a[0]
        if prime_len <= 0:
            den_counts = [1]
        else:
            den_counts = counts[dirs[a.a[0]:]]
        den_ok = LaurentPoly(den_counts) == qr.den
        rep.check(num_ok and den_ok, a, (qr.num, qr.den), (cnt, den_counts))


def _matrix_identities(rep: VerifyReport, c: tuple[int, ...], tag) -> None:
    """Identities that hold for any negative-type sequence with entries >= 2."""
    m = matrix_neg(c)
    k = len(c)
    # Product of generators.
    word = Mat2.identity()
    s = generators("S")
    for ci in c:
        word = word @ generators("R", ci) @ s
    rep.check(word == m, ("R^c S word", tag), m, word)
    # Continuant form.
    tail = monomial(c[-1] - 1, -1)
    expect = Mat2(
        continuant_neg(c),
        tail * continuant_neg(c[:-1]),
        continuant_neg(c[1:]),
        tail * continuant_neg(c[1:-1]) if k > 1 else LaurentPoly(),
    )
    rep.check(expect == m, ("continuant form", tag), expect, m)
    # Determinant.
    rep.check(m.det() == monomial(sum(c) - k), ("det", tag), monomial(sum(c) - k), m.det())


def _matrices(rep: VerifyReport, max_sum: int, samples: int, seed: int, **_) -> None:
    rng = random.Random(seed)
    for x in coprime_pairs(max_sum):
        a = expand_regular(x).a
        c = expand_negative(x).c
        qr = qdeform(x)
        mt = matrix_reg_normalized(a)
        rep.check(mt.a == qr.num.shift(1) and mt.c == qr.den.shift(1), ("regular first column", x), qr, mt)
        rep.check(mt == matrix_neg(c) @ generators("R", 1), ("normalized regular = M_q(c) R_q", x), None, None)
        word = Mat2.identity()
        for i, ai in enumerate(a):
            word = word @ generators("R" if i % 2 == 0 else "L", ai)
        rep.check(word == matrix_reg(a), ("R^a L^a word", x), None, None)
        # Continuant form of the regular matrix; right column carries q^(-a_2m).
        low = monomial(-a[-1])
        expect = Mat2(
            continuant_reg(a),
            low * continuant_reg(a[:-1]),
            continuant_reg(a[1:], first_index=2),
            low * continuant_reg(a[1:-1], first_index=2),
        )
        rep.check(expect == matrix_reg(a), ("regular continuant form", x), expect, matrix_reg(a))
        shift = sum(a[1::2]) - 1
        rep.check(
            continuant_reg(a).shift(shift) == qr.num and continuant_reg(a[1:], first_index=2).shift(shift) == qr.den,
            ("numerator/denominator as continuants", x),
            None,
            None,
        )
        _matrix_identities(rep, c, x)
    for _ in range(samples):
        c = _random_neg_sequence(rng)
        _matrix_identities(rep, c, c)
        if len(c) >= 2:
            i = rng.randint(1, len(c) - 1)
            new = surgery_insert(c, i)
            rep.check(matrix_neg(new) == matrix_neg(c).scale(monomial(1)), ("insert", c, i), None, new)
        i = rng.randint(1, len(c))
        first = rng.randint(1, c[i - 1])
        new = surgery_break(c, i, first)
        rep.check(matrix_neg(new) == -matrix_neg(c), ("break", c, i, first), None, new)


DECAGON = (3, 3, 1, 2, 4, 3, 1, 2, 4, 1)


def _quiddity(rep: VerifyReport, max_sum: int, samples: int, seed: int, **_) -> None:
    rng = random.Random(seed)
    rep.check(quiddity_scalar(DECAGON) == monomial(7, -1), DECAGON, "-q^7", quiddity_scalar(DECAGON))
    for c in ((1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1, 2, 1)):
        rep.check(quiddity_classify(c) is QuiddityClass.THREE_D_DISSECTION, c, "ThreeDDissection", quiddity_classify(c))
    for x in coprime_pairs(max_sum):
        tri = triangulation_build(expand_regular(x))
        quid = tri.quiddity
        ok = quiddity_scalar(quid) == monomial(tri.n - 3, -1)
        ok = ok and tri.labels_from(1)[tri.k] == x
        ok = ok and quid[1:tri.k + 1] == expand_negative(x).c
        rep.check(ok, x, f"-q^{tri.n - 3}", quid)
    for _ in range(samples):
        n = rng.randint(3, 12)
        tri = random_triangulation(n, rng)
        rep.check(quiddity_classify(tri.quiddity) is QuiddityClass.TRIANGULATION, tri.quiddity, "Triangulation", quiddity_classify(tri.quiddity))


def _continuants(rep: VerifyReport, samples: int, seed: int, **_) -> None:
    rng = random.Random(seed)
    for _ in range(samples):
        c = _random_neg_sequence(rng)
        k = len(c)
        lhs = continuant_neg(c)
        rhs = continuant_neg(c[::-1], variable="q_inverse").shift(sum(c) - k)
        rep.check(lhs == rhs, ("mirror", c), lhs, rhs)
        n = len(c)
        for i, j, kk, l in combinations(range(n + 2), 4):
            left = continuant_block(c, i, kk) * continuant_block(c, j, l)
            e = sum(c[j - 1:kk - 1]) - (kk - j)
            right = continuant_block(c, i, j) * continuant_block(c, kk, l) * monomial(e) + continuant_block(c, j, kk) * continuant_block(c, i, l)
            rep.check(left == right, ("euler", c, (i, j, kk, l)), left, right)


def _ptolemy(rep: VerifyReport, max_sum: int, fan_max: int = 8, **_) -> None:
    for x in coprime_pairs(max_sum):
        qr = qdeform(x)
        x0, x1 = ptolemy_solve(x)
        tri = triangulation_build(expand_regular(x))
        shift = tri.n - 3
        rep.check(x0.shift(shift) == qr.num and x1.shift(shift) == qr.den, ("solve", x), (qr.num, qr.den), (x0, x1))
        full = ptolemy_system(tri, initial_weights(tri))
        bad = ptolemy_violations(full)
        rep.check(not bad, ("relations", x), [], bad[:3])
        k = tri.k
        rep.check(full[0, k + 1] == x0 and full[1, k + 1] == x1, ("system agrees", x), (x0, x1), (full[0, k + 1], full[1, k + 1]))
    for c in range(2, fan_max + 1):
        for beta in range(0, 4):
            tri, w = fan_polygon(c, beta)
            got = fan_diagonal(w, c + 1, list(range(0, c + 1)))
            want = q_int(c).shift(-(beta + c - 1))
            rep.check(got == want, ("fan", c, beta), want, got)


def _sequences(rep: VerifyReport, max_n: int = 20, **_) -> None:
    for n in range(1, max_n + 1):
        f, ft = q_fibonacci(n)
        rep.check(f(1) == fibonacci(n) and ft(1) == fibonacci(n), ("fib value", n), fibonacci(n), (f(1), ft(1)))
        rep.check(f.reversed() == ft, ("fib mirror", n), f.reversed(), ft)
        nxt = q_fibonacci(n + 1)[1]
        qr = qdeform(Rational(fibonacci(n + 1), fibonacci(n)))
        rep.check(qr.num == nxt and qr.den == f, ("fib ratio", n), (qr.num, qr.den), (nxt, f))
        p, pt = q_pell(n)
        rep.check(p(1) == pell(n) and pt(1) == pell(n), ("pell value", n), pell(n), (p(1), pt(1)))
        rep.check(p.reversed() == pt, ("pell mirror", n), p.reversed(), pt)
        qr = qdeform(Rational(pell(n + 1), pell(n)))
        rep.check(qr.num == q_pell(n + 1)[0] and qr.den == pt, ("pell ratio", n), None, None)


def _jones(rep: VerifyReport, max_sum: int, **_) -> None:
    for x in coprime_pairs(max_sum):
        j = jones_polynomial(x).j
        a = expand_regular(x).a
        routes = {
            "continuant": jones_via_continuant(x).j,
            "regular": jones_via_regular(x).j,
            "closures": jones_via_closures(x).j,
            "weighted": jones_via_closures(x, "weighted").j,
        }
        for name, other in routes.items():
            rep.check(other == j, (name, x), j, other)
        ok = j(1) == x.r and j.degree == sum(a) and j.constant_term == 1 and all(v >= 0 for v in j.to_list())
        rep.check(ok, ("shape", x), f"J(1)={x.r}, deg={sum(a)}", j)


SUITES: dict[str, Callable[..., None]] = {
    "equality": _equality,
    "degrees": _degrees,
    "qminus1": _qminus1,
    "positivity": _positivity,
    "mediant": _mediant,
    "closures": _closures,
    "matrices": _matrices,
    "quiddity": _quiddity,
    "continuants": _continuants,
    "ptolemy": _ptolemy,
    "sequences": _sequences,
    "jones": _jones,
}

DEFAULT_BOUNDS: dict[str, dict] = {
    "equality": {"max_sum": 150},
    "degrees": {"max_sum": 150},
    "qminus1": {"max_sum": 100},
    "positivity": {"max_sum": 24},
    "mediant": {"depth": 8},
    "closures": {"max_a_sum": 18},
    "matrices": {"max_sum": 60, "samples": 500},
    "quiddity": {"max_sum": 60, "samples": 200},
    "continuants": {"samples": 500},
    "ptolemy": {"max_sum": 20},
    "sequences": {"max_n": 20},
    "jones": {"max_sum": 20},
}


def run_suite(name: str, seed: int = 42, **overrides) -> VerifyReport:
    """Run one suite; keyword overrides replace entries of its default bounds."""
    if name not in SUITES:
        raise KeyError(name)
    bounds = dict(DEFAULT_BOUNDS[name])
    for key, value in overrides.items():
        if key in bounds and value is not None:
            bounds[key] = value
    rep = VerifyReport(name, dict(bounds, seed=seed) if name in ("matrices", "quiddity", "continuants") else bounds)
    start = time.perf_counter()
    SUITES[name](rep, seed=seed, **bounds)
    rep.wall_time = time.perf_counter() - start
    return rep


def run_suites(names: list[str] | None = None, seed: int = 42, **overrides) -> list[VerifyReport]:
    return [run_suite(n, seed=seed, **overrides) for n in (names or list(SUITES))]


# -- conjectures ---------------------------------------------------------------------------------


def conjecture_report(max_sum: int = 30) -> dict:
    """Scan unimodality of ``R`` and ``S`` and divisibility of ``R`` by ``1+q+q^2`` when ``3 | r``.

    Counterexamples are collected, never raised.
    """
    three = q_int(3)
    unimodal_bad = []
    divisible_bad = []
    checked = 0
    for x in coprime_pairs(max_sum):
        qr = qdeform(x)
        checked += 1
        if not unimodal(qr.num) or not unimodal(qr.den):
            unimodal_bad.append({"x": str(x), "num": str(qr.num), "den": str(qr.den)})
        if x.r % 3 == 0:
            try:
                exact_divide(qr.num, three)
            except NotDivisibleError:
                divisible_bad.append({"x": str(x), "num": str(qr.num)})
    return {
        "max_sum": max_sum,
        "checked": checked,
        "unimodality_counterexamples": unimodal_bad,
        "divisibility_counterexamples": divisible_bad,
    }

