"""Weighted Farey graph, triangulations of polygons and the Ptolemy weight system.

Vertices of the Farey graph are rationals; two of them are joined when they
are Farey neighbours (``|r s' - r' s| = 1``).  Weighting the edges by powers
of ``q`` turns the classical mediant into the weighted mediant

    (R_L + q^l R_R) / (S_L + q^l S_R),

and every label produced that way is the q-deformation of its value.

The second half of the module deals with the triangulated ``n``-gon
``T_{r/s}`` attached to a regular expansion, its quiddity sequence, and the
Ptolemy relations among the edge weights.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .contfrac import CFNegative, CFRegular, Rational, expand_negative, expand_regular
from .errors import DomainError
from .qpoly import ONE, ZERO, LaurentPoly, exact_divide, monomial
from .qrat import QRational, matrix_neg, qdeform

__all__ = [
    "FareyNode",
    "FareyTreeEntry",
    "weighted_mediant",
    "farey_tree",
    "farey_node",
    "positivity_diff",
    "neighbor_weight",
    "surgery_insert",
    "surgery_break",
    "QuiddityClass",
    "quiddity_classify",
    "quiddity_scalar",
    "Triangulation",
    "triangulation_build",
    "random_triangulation",
    "PtolemyWeights",
    "initial_weights",
    "ptolemy_system",
    "ptolemy_chain",
    "fan_diagonal",
    "ptolemy_solve",
    "fan_polygon",
    "ptolemy_violations",
]


# -- weighted Farey sums ----------------------------------------------------------------


def _neg_sequence(x: Rational) -> tuple[int, ...]:
    """Negative expansion, extended to the boundary values ``1/0 -> ()`` and ``1/1 -> (1,)``."""
    if (x.r, x.s) == (1, 0):
        return ()
    if (x.r, x.s) == (1, 1):
        return (1,)
    return expand_negative(x).c


@dataclass(frozen=True)
class FareyNode:
    """A vertex of the weighted Farey graph."""

    value: Rational
    label: QRational
    neg_expansion: CFNegative | None = None

    def to_json(self) -> dict:
        return {"value": str(self.value), "num": self.label.num.to_json(), "den": self.label.den.to_json()}


def farey_node(x: Rational) -> FareyNode:
    """Node for ``x`` labelled by its q-deformation."""
    neg = None if x.is_boundary else expand_negative(x)
    return FareyNode(x, qdeform(x), neg)


def _check_neighbors(x: Rational, y: Rational) -> int:
    d = x.r * y.s - x.s * y.r
    if abs(d) != 1:
        raise DomainError(f"{x} and {y} are not Farey neighbours (determinant {d})")
    return d


def weighted_mediant(left: FareyNode, right: FareyNode) -> tuple[FareyNode, int]:
    """Weighted Farey sum of two neighbours with ``left < right``.

    The exponent is ``l = c_k - 1`` where ``c_k`` is the last entry of the
    child's negative expansion.

    >>> child, l = weighted_mediant(farey_node(Rational(1, 1)), farey_node(Rational(2, 1)))
    >>> str(child.value), l
    ('3/2', 1)
    """
    if not left.value < right.value:
        raise DomainError(f"weighted_mediant needs left < right, got {left.value} and {right.value}")
    _check_neighbors(left.value, right.value)
    value = left.value.mediant(right.value)
    if value.s == 0 or value.r <= value.s:
        raise DomainError(f"weighted mediants are defined here only above 1, got {value}")
    neg = expand_negative(value)
    ell = neg.c[-1] - 1
    num = left.label.num + right.label.num.shift(ell)
    den = left.label.den + right.label.den.shift(ell)
    return FareyNode(value, QRational(num, den, value), neg), ell


@dataclass(frozen=True)
class FareyTreeEntry:
    """A node of the weighted tree together with the triangle it closes."""

    node: FareyNode
    depth: int
    left: Rational | None
    right: Rational | None
    ell: int | None  # exponent on the edge node--right; the edge left--node has weight 1

    def to_json(self) -> dict:
        out = self.node.to_json()
        out.update(
            depth=self.depth,
            left=None if self.left is None else str(self.left),
            right=None if self.right is None else str(self.right),
            parent_edge_weight_exponent=None if self.ell is None else self.ell - 1,
            right_edge_weight_exponent=self.ell,
        )
        return out


def farey_tree(depth: int) -> list[FareyTreeEntry]:
    """Breadth-first weighted Stern-Brocot tree on ``[1, oo)``.

    Depth 0 is the triangle ``(1/1, 2/1, 1/0)``.  Each new vertex sits below an
    edge ``L--R`` of weight ``q^w``; it gets the label
    ``(R_L + q^(w+1) R_R) / (S_L + q^(w+1) S_R)`` and the new edges
    ``L--child`` (weight 1) and ``child--R`` (weight ``q^(w+1)``).
    Labels are computed from the edge weights alone, never from ``qdeform``.
    """
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    one = FareyNode(Rational(1, 1), QRational(ONE, ONE, Rational(1, 1)))
    inf = FareyNode(Rational(1, 0), QRational(ONE, ZERO, Rational(1, 0)))
    two = FareyNode(Rational(2, 1), QRational(one.label.num + inf.label.num.shift(1), one.label.den + inf.label.den.shift(1), Rational(2, 1)))
    out = [
        FareyTreeEntry(one, 0, None, None, None),
        FareyTreeEntry(two, 0, one.value, inf.value, 1),
        FareyTreeEntry(inf, 0, None, None, None),
    ]
    # Open edges of the current frontier: (left node, right node, weight exponent).
    frontier = [(one, two, 0), (two, inf, 1)]
    for d in range(1, depth + 1):
        nxt = []
        for lnode, rnode, w in frontier:
            ell = w + 1
            value = lnode.value.mediant(rnode.value)
            label = QRational(
                lnode.label.num + rnode.label.num.shift(ell),
                lnode.label.den + rnode.label.den.shift(ell),
                value,
            )
            child = FareyNode(value, label, expand_negative(value))
            out.append(FareyTreeEntry(child, d, lnode.value, rnode.value, ell))
            nxt.append((lnode, child, 0))
            nxt.append((child, rnode, ell))
        frontier = nxt
    return out


# -- positivity ------------------------------------------------------------------------------


def positivity_diff(x: Rational, y: Rational) -> LaurentPoly:
    """``X = R_x S_y - S_x R_y`` for ``x >= y``.

    >>> positivity_diff(Rational(5, 2), Rational(2, 1))
    LaurentPoly([1], min_exp=3)
    """
    if x < y:
        raise DomainError(f"positivity_diff needs x >= y, got {x} < {y}")
    qx, qy = qdeform(x), qdeform(y)
    return qx.num * qy.den - qx.den * qy.num


def neighbor_weight(x: Rational, y: Rational) -> int:
    """Closed form for the exponent ``a`` with ``positivity_diff(x, y) = q^a``.

    Let ``z`` be whichever of the two has the larger numerator.  If ``z = x``
    (the larger value) then ``a = deg R_x = sum(c) - k`` over the negative
    expansion of ``x``.  Otherwise ``a = c'_1 + ... + c'_(k'-1) - k' + 1`` over
    the negative expansion ``[[c'_1, ..., c'_k']]`` of ``y``.
    """
    if not x > y:
        raise DomainError(f"neighbor_weight needs x > y, got {x} and {y}")
    _check_neighbors(x, y)
    if x.r > y.r:
        c = _neg_sequence(x)
        return sum(c) - len(c)
    c = _neg_sequence(y)
    return sum(c[:-1]) - len(c) + 1


# -- surgery and quiddities --------------------------------------------------------------


def surgery_insert(c: Sequence[int], i: int) -> tuple[int, ...]:
    """Insert a 1 after position ``i`` (1-based): ``(..., c_i+1, 1, c_(i+1)+1, ...)``.

    The matrix of the result is ``q`` times the matrix of the input.
    """
    c = tuple(c)
    if not 1 <= i < len(c):
        raise DomainError(f"insert position must satisfy 1 <= i < {len(c)}, got {i}")
    return c[: i - 1] + (c[i - 1] + 1, 1, c[i] + 1) + c[i + 1:]


def surgery_break(c: Sequence[int], i: int, first: int) -> tuple[int, ...]:
    """Replace ``c_i`` by ``(c', 1, 1, c'')`` with ``c' + c'' = c_i + 1``.

    The matrix of the result is minus the matrix of the input.
    """
    c = tuple(c)
    if not 1 <= i <= len(c):
        raise DomainError(f"break position must satisfy 1 <= i <= {len(c)}, got {i}")
    second = c[i - 1] + 1 - first
    if first < 1 or second < 1:
        raise DomainError(f"split {first} + {second} of {c[i - 1]} + 1 needs both parts >= 1")
    return c[: i - 1] + (first, 1, 1, second) + c[i:]


class QuiddityClass(enum.Enum):
    TRIANGULATION = "Triangulation"
    THREE_D_DISSECTION = "ThreeDDissection"
    NEITHER = "Neither"


def quiddity_scalar(c: Sequence[int]) -> LaurentPoly | None:
    """``x`` when ``M_q(c) = x * Id``, else ``None``."""
    return matrix_neg(c).scalar_value()


def quiddity_classify(c: Sequence[int]) -> QuiddityClass:
    """Classify a cyclic sequence by the scalar matrix ``M_q(c)``.

    Triangulations give ``-q^(n-3) Id``.  Every other 3d-dissection gives
    ``±q^e Id`` with ``2e = sum(c) - n`` (forced by the determinant), so the
    exponent only equals ``n - 3`` when all pieces are triangles.
    """
    c = tuple(c)
    if len(c) < 3:
        raise DomainError("a quiddity sequence needs at least 3 entries")
    if any(x < 1 for x in c):
        raise DomainError("quiddity entries must be positive")
    x = quiddity_scalar(c)
    n = len(c)
    if x == monomial(n - 3, -1):
        return QuiddityClass.TRIANGULATION
    e, odd = divmod(sum(c) - n, 2)
    if not odd and x in (monomial(e), monomial(e, -1)):
        return QuiddityClass.THREE_D_DISSECTION
    return QuiddityClass.NEITHER


# -- triangulations ------------------------------------------------------------------------


@dataclass(frozen=True)
class SnakeTriangle:
    """Triangle number ``index`` of a snake triangulation.

    ``base`` is the edge opposite ``apex``.  Base-down triangles have their
    base on the lower side of the polygon.
    """

    index: int
    vertices: tuple[int, int, int]
    base: tuple[int, int]
    apex: int
    base_down: bool


@dataclass
class Triangulation:
    """A triangulated convex ``n``-gon with vertices ``0, ..., n-1`` in cyclic order.

    For snake triangulations built from a regular expansion, vertex 0 is
    ``0/1``, vertex 1 is ``1/0``, the upper vertices ``1, ..., k+1`` run from
    left to right and the lower vertices ``n-1, n-2, ..., k+2`` do as well.
    """

    n: int
    triangles: list[tuple[int, int, int]]
    vertex_labels: list[Rational] | None = None
    snake: list[SnakeTriangle] = field(default_factory=list)
    k: int | None = None

    @property
    def quiddity(self) -> tuple[int, ...]:
        """Triangles incident to each vertex, indexed by vertex number."""
        counts = [0] * self.n
        for t in self.triangles:
            for v in t:
                counts[v] += 1
        return tuple(counts)

    def quiddity_from(self, start: int = 1) -> tuple[int, ...]:
        """The quiddity read cyclically from ``start``.

        Starting at vertex 1 the first ``k`` entries form the negative
        expansion of the value at vertex ``k+1``.
        """
        q = self.quiddity
        return q[start:] + q[:start]

    def labels_from(self, start: int = 1) -> list[Rational]:
        if self.vertex_labels is None:
            raise DomainError("this triangulation carries no vertex labels")
        return self.vertex_labels[start:] + self.vertex_labels[:start]

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for a, b, c in self.triangles:
            for u, v in ((a, b), (b, c), (a, c)):
                out.add((min(u, v), max(u, v)))
        return out


def triangulation_build(a: CFRegular) -> Triangulation:
    """The snake triangulation ``T_{r/s}``: ``a_1`` base-down triangles, then ``a_2`` base-up, and so on.

    Labels come from iterated Farey sums starting at ``0/1`` and ``1/0``.
    Each triangle is attached to the current diagonal ``(top, bottom)``; a
    base-down triangle adds a lower vertex, a base-up triangle an upper one.
    """
    seq = a.a if isinstance(a, CFRegular) else tuple(a)
    n = sum(seq) + 2
    k = sum(seq[1::2])
    labels: list[Rational | None] = [None] * n
    labels[0] = Rational(0, 1)
    labels[1] = Rational(1, 0)
    top, bottom = 1, 0
    next_top, next_bottom = 2, n - 1
    triangles: list[tuple[int, int, int]] = []
    snake: list[SnakeTriangle] = []
    index = 0
    for block, count in enumerate(seq):
        base_down = block % 2 == 0
        for _ in range(count):
            value = labels[top].mediant(labels[bottom])
            if base_down:
                new = next_bottom
                next_bottom -= 1
                labels[new] = value
                tri = SnakeTriangle(index, (top, bottom, new), (bottom, new), top, True)
                bottom = new
            else:
                new = next_top
                next_top += 1
                labels[new] = value
                tri = SnakeTriangle(index, (top, bottom, new), (top, new), bottom, False)
                top = new
            triangles.append(tri.vertices)
            snake.append(tri)
            index += 1
    return Triangulation(n, triangles, labels, snake, k)  # type: ignore[arg-type]


def random_triangulation(n: int, rng: random.Random) -> Triangulation:
    """Grow a triangulated ``n``-gon from a triangle by random ear insertions.

    Each step picks a boundary edge ``(u, v)`` and glues a new triangle
    ``(u, w, v)`` onto it with a fresh vertex ``w`` placed between ``u`` and
    ``v``.  Vertices are renumbered in cyclic order at the end.
    """
    if n < 3:
        raise DomainError("a polygon needs at least 3 vertices")
    cycle = [0, 1, 2]
    triangles = [(0, 1, 2)]
    fresh = 3
    while len(cycle) < n:
        pos = rng.randrange(len(cycle))
        u, v = cycle[pos], cycle[(pos + 1) % len(cycle)]
        cycle.insert(pos + 1, fresh)
        triangles.append((u, fresh, v))
        fresh += 1
    order = {v: i for i, v in enumerate(cycle)}
    renamed = [tuple(sorted(order[x] for x in t)) for t in triangles]
    return Triangulation(n, renamed)  # type: ignore[arg-type]


# -- Ptolemy weights -----------------------------------------------------------------------


class PtolemyWeights:
    """Symmetric map ``(i, j) -> x_{i,j}`` on the vertices of an ``n``-gon."""

    def __init__(self, n: int, values: dict[tuple[int, int], LaurentPoly] | None = None):
        self.n = n
        self._x: dict[tuple[int, int], LaurentPoly] = {}
        for (i, j), v in (values or {}).items():
            self[i, j] = v

    def __getitem__(self, key: tuple[int, int]) -> LaurentPoly:
        i, j = key
        if i == j:
            return ZERO
        return self._x[(min(i, j), max(i, j))]

    def __setitem__(self, key: tuple[int, int], value: LaurentPoly) -> None:
        i, j = key
        if i == j:
            raise DomainError("x_{i,i} is fixed to 0")
        self._x[(min(i, j), max(i, j))] = value

    def __contains__(self, key: tuple[int, int]) -> bool:
        i, j = key
        return i == j or (min(i, j), max(i, j)) in self._x

    def items(self):
        return self._x.items()

    def __len__(self) -> int:
        return len(self._x)


def initial_weights(tri: Triangulation) -> PtolemyWeights:
    """Initial values on the edges of a snake triangulation.

    The base of triangle number ``l`` gets ``q^l`` when the triangle is
    base-down and ``q^-l`` when it is base-up; every other side and diagonal
    gets 1.
    """
    if not tri.snake:
        raise DomainError("initial weights are defined for snake triangulations")
    w = PtolemyWeights(tri.n)
    for u, v in tri.edges():
        w[u, v] = ONE
    for t in tri.snake:
        w[t.base] = monomial(t.index if t.base_down else -t.index)
    return w


def _det2(u: tuple[LaurentPoly, LaurentPoly], v: tuple[LaurentPoly, LaurentPoly]) -> LaurentPoly:
    return u[0] * v[1] - u[1] * v[0]


def ptolemy_system(tri: Triangulation, initial: PtolemyWeights) -> PtolemyWeights:
    """Extend weights given on the edges of ``tri`` to every pair of vertices.

    Positive solutions of the Ptolemy relations are Pluecker coordinates:
    ``x_{i,j} = det(v_i, v_j)`` for ``i < j`` and suitable vectors ``v_i``.
    The vectors are placed triangle by triangle.  Each step divides by the
    weight of an edge of ``tri``, so it is exact whenever those weights are
    units ``±q^e``.
    """
    n = tri.n

    def signed(u: int, v: int) -> LaurentPoly:
        return initial[u, v] if u < v else -initial[u, v]

    vec: dict[int, tuple[LaurentPoly, LaurentPoly]] = {}
    first = tri.triangles[0]
    a, b = first[0], first[1]
    vec[a] = (ONE, ZERO)
    vec[b] = (ZERO, signed(a, b))
    pending = list(tri.triangles)
    while pending:
        progress = False
        rest = []
        for t in pending:
            placed = [v for v in t if v in vec]
            if len(placed) == 3:
                progress = True
                continue
            if len(placed) < 2:
                rest.append(t)
                continue
            u, v = placed
            w = next(x for x in t if x not in vec)
            d = signed(u, v)
            beta = exact_divide(signed(u, w), d)
            alpha = -exact_divide(signed(v, w), d)
            vec[w] = (alpha * vec[u][0] + beta * vec[v][0], alpha * vec[u][1] + beta * vec[v][1])
            progress = True
        if not progress:
            raise DomainError("triangles do not form a connected triangulation")
        pending = rest
    out = PtolemyWeights(n)
    for i, j in combinations(range(n), 2):
        out[i, j] = _det2(vec[i], vec[j])
    return out


def ptolemy_chain(x: PtolemyWeights, chain: Sequence[int]) -> LaurentPoly:
    """Weight of the edge joining the ends of a vertex chain ``v_0, ..., v_(m+1)``.

    Needs ``x`` on consecutive pairs and on pairs two apart.  The result is the
    determinant of the ``m x m`` tridiagonal matrix with diagonal
    ``x[v_(t-1), v_(t+1)]``, superdiagonal ``x[v_(t+1), v_(t+2)]`` and
    subdiagonal ``x[v_(t-1), v_t]``, divided by ``x[v_1, v_2] ... x[v_(m-1), v_m]``.
    """
    v = list(chain)
    m = len(v) - 2
    if m < 1:
        raise DomainError("a chain needs at least three vertices")
    prev, cur = ONE, x[v[0], v[2]]
    for t in range(2, m + 1):
        diag = x[v[t - 1], v[t + 1]]
        off = x[v[t], v[t + 1]] * x[v[t - 2], v[t - 1]]
        prev, cur = cur, diag * cur - off * prev
    den = ONE
    for t in range(1, m):
        den = den * x[v[t], v[t + 1]]
    return exact_divide(cur, den)


def _fan_neighbors(tri: Triangulation, apex: int, start: int, stop: int) -> list[int]:
    links: dict[int, list[int]] = {}
    for t in tri.triangles:
        if apex in t:
            p, r = (u for u in t if u != apex)
            links.setdefault(p, []).append(r)
            links.setdefault(r, []).append(p)
    path = [start]
    prev = None
    while path[-1] != stop:
        options = [u for u in links[path[-1]] if u != prev]
        if not options:
            raise DomainError(f"vertices {start} and {stop} are not joined through the fan at {apex}")
        prev = path[-1]
        path.append(options[0])
    return path


def fan_diagonal(x: PtolemyWeights, apex: int, rim: Sequence[int]) -> LaurentPoly:
    """Weight between the two ends of the rim of a fan of triangles around ``apex``.

    The rim vertices ``u_0, ..., u_p`` are the neighbours of ``apex`` in order.
    Pairs two apart on the rim are found from the quadrilateral
    ``(u_(t-1), u_t, u_(t+1), apex)``; the chain formula finishes the job.
    """
    u = list(rim)
    if len(u) == 2:
        return x[u[0], u[1]]
    work = PtolemyWeights(x.n, dict(x.items()))
    for t in range(1, len(u) - 1):
        if (u[t - 1], u[t + 1]) in work:
            continue
        top = work[u[t - 1], u[t]] * work[u[t + 1], apex] + work[u[t], u[t + 1]] * work[u[t - 1], apex]
        work[u[t - 1], u[t + 1]] = exact_divide(top, work[u[t], apex])
    return ptolemy_chain(work, u)


def ptolemy_solve(x: Rational) -> tuple[LaurentPoly, LaurentPoly]:
    """``(x_{0,k+1}, x_{1,k+1})`` on the weighted snake triangulation of ``x``.

    Upper vertices ``1, ..., k+1`` form a chain.  The weights two apart on it,
    ``x_{i-1,i+1}``, come from the fan of triangles around vertex ``i``; the
    chain formula then gives the two long diagonals.  Multiplying by
    ``q^(n-3)`` recovers the numerator and denominator of ``[x]_q``.

    >>> num, den = ptolemy_solve(Rational(5, 2))
    >>> num.shift(3)
    LaurentPoly([1, 2, 1, 1])
    """
    a = expand_regular(x)
    tri = triangulation_build(a)
    k = tri.k
    w = initial_weights(tri)
    for i in range(1, k + 1):
        rim = _fan_neighbors(tri, i, i - 1, i + 1)
        w[i - 1, i + 1] = fan_diagonal(w, i, rim)
    x0 = ptolemy_chain(w, list(range(0, k + 2)))
    x1 = w[1, 2] if k == 1 else ptolemy_chain(w, list(range(1, k + 2)))
    return x0, x1


def fan_polygon(c: int, beta: int) -> tuple[Triangulation, PtolemyWeights]:
    """The fan ``(c+2)``-gon used for the lemma on ``x_{0,c}``.

    Vertex ``c+1`` is the apex joined to ``0, ..., c``.  Weights: ``x_{0,c+1} =
    q^-beta``, ``x_{0,1} = x_{c-1,c} = 1``, ``x_{i,i+1} = q^(beta+i)`` for
    ``1 <= i <= c-2``, ``x_{c,c+1} = q^-(beta+c-1)`` and 1 on every spoke.
    """
    if c < 2:
        raise DomainError("the fan needs c >= 2")
    apex = c + 1
    tri = Triangulation(c + 2, [(t, t + 1, apex) for t in range(c)])
    w = PtolemyWeights(c + 2)
    for t in range(1, c):
        w[t, apex] = ONE
    w[0, apex] = monomial(-beta)
    w[0, 1] = ONE
    for t in range(1, c - 1):
        w[t, t + 1] = monomial(beta + t)
    w[c - 1, c] = ONE
    w[c, apex] = monomial(-(beta + c - 1))
    return tri, w


def ptolemy_violations(x: PtolemyWeights) -> list[tuple[int, int, int, int]]:
    """Quadruples ``i < j < k < l`` where ``x_ik x_jl != x_ij x_kl + x_il x_jk``."""
    bad = []
    for i, j, k, l in combinations(range(x.n), 4):
        if x[i, k] * x[j, l] != x[i, j] * x[k, l] + x[i, l] * x[j, k]:
            bad.append((i, j, k, l))
    return bad
