"""Oriented path graphs and their closures.

A closure of an oriented graph is a set of vertices with no edge leaving it.
For a path graph every edge joins ``i`` and ``i+1``; a *Left* edge points to the
smaller index and a *Right* edge to the larger one.

Counting the closures of the path ``G_{r/s}`` by size gives the coefficients
of the numerator of ``[r/s]_q``; the shorter path ``G'_{r/s}`` gives the
denominator.  A slightly longer path with a constraint on its first two
vertices gives the normalized Jones polynomial of the rational knot.

Closures are found by exhaustive search with subsets stored as integer
bitmasks (bit ``i`` is vertex ``i``, numbered from 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .contfrac import CFRegular
from .errors import CapacityError, DomainError
from .qpoly import LaurentPoly

__all__ = [
    "LEFT",
    "RIGHT",
    "QuiverPath",
    "ClosureGF",
    "MAX_VERTICES",
    "build_graph",
    "build_graph_prime",
    "jones_graph",
    "directions_to_cf",
    "is_closure",
    "enumerate_closures",
    "closure_counts",
    "closure_polynomial",
    "specialize_gf",
    "jones_closure_counts",
    "sweep_paths",
]

LEFT = "L"
RIGHT = "R"

#: Largest graph the subset scan accepts.
MAX_VERTICES = 30
_CHUNK_BITS = 20


@dataclass(frozen=True)
class QuiverPath:
    """Path on ``vertex_count`` vertices; ``directions[i]`` orients the edge ``i -- i+1``."""

    vertex_count: int
    directions: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "directions", tuple(self.directions))
        if self.vertex_count < 0:
            raise DomainError("vertex count must be nonnegative")
        if len(self.directions) != max(self.vertex_count - 1, 0):
            raise DomainError(f"{self.vertex_count} vertices need {max(self.vertex_count - 1, 0)} edges, got {len(self.directions)}")
        if any(d not in (LEFT, RIGHT) for d in self.directions):
            raise DomainError("edge directions must be 'L' or 'R'")

    @classmethod
    def from_directions(cls, directions: Sequence[str]) -> "QuiverPath":
        return cls(len(directions) + 1, tuple(directions))

    def arrows(self) -> list[tuple[int, int]]:
        """Edges as ``(source, target)`` pairs."""
        out = []
        for i, d in enumerate(self.directions):
            out.append((i + 1, i) if d == LEFT else (i, i + 1))
        return out

    def __str__(self) -> str:
        if self.vertex_count == 0:
            return "(empty)"
        arrows = {LEFT: "<-", RIGHT: "->"}
        return "o" + "".join(arrows[d] + "o" for d in self.directions)


def _runs_to_directions(runs: Sequence[int]) -> tuple[str, ...]:
    out: list[str] = []
    for i, length in enumerate(runs):
        out.extend([LEFT if i % 2 == 0 else RIGHT] * length)
    return tuple(out)


def _reg(a: CFRegular | Sequence[int]) -> tuple[int, ...]:
    seq = a.a if isinstance(a, CFRegular) else tuple(a)
    if not seq or len(seq) % 2 or any(x < 1 for x in seq):
        raise DomainError(f"not a regular expansion of even length: {list(seq)}")
    return seq


def build_graph(a: CFRegular | Sequence[int]) -> QuiverPath:
    """``G_{r/s}``: ``a_1 - 1`` Left edges, ``a_2`` Right, ``a_3`` Left, ..., ``a_2m - 1`` Right.

    >>> str(build_graph((2, 2)))
    'o<-o->o'
    """
    seq = _reg(a)
    runs = list(seq)
    runs[0] -= 1
    runs[-1] -= 1
    return QuiverPath(sum(seq) - 1, _runs_to_directions(runs))


def build_graph_prime(a: CFRegular | Sequence[int]) -> QuiverPath:
    """``G'_{r/s}``: ``G_{r/s}`` with its first ``a_1`` edges and vertices removed."""
    seq = _reg(a)
    g = build_graph(seq)
    count = g.vertex_count - seq[0]
    if count <= 0:
        return QuiverPath(0, ())
    return QuiverPath(count, g.directions[seq[0]:])


def jones_graph(a: CFRegular | Sequence[int]) -> QuiverPath:
    """Path on ``a_1 + ... + a_2m`` vertices: ``a_1`` Left, ``a_2`` Right, ..., ``a_2m - 1`` Right."""
    seq = _reg(a)
    runs = list(seq)
    runs[-1] -= 1
    return QuiverPath(sum(seq), _runs_to_directions(runs))


def directions_to_cf(directions: Sequence[str]) -> CFRegular:
    """Inverse of :func:`build_graph`: the regular expansion whose graph has these edges."""
    d = list(directions)
    runs: list[int] = []
    want = LEFT
    i = 0
    while i < len(d) or not runs:
        length = 0
        while i < len(d) and d[i] == want:
            length += 1
            i += 1
        runs.append(length)
        want = RIGHT if want == LEFT else LEFT
        if i == len(d):
            break
    if len(runs) % 2:
        runs.append(0)
    runs[0] += 1
    runs[-1] += 1
    return CFRegular(tuple(runs))


def is_closure(g: QuiverPath, subset: set[int] | frozenset[int]) -> bool:
    """Direct check of the definition: no arrow leaves the subset."""
    return all(not (s in subset and t not in subset) for s, t in g.arrows())


@dataclass(frozen=True)
class ClosureGF:
    """Closures of a path graph, kept as bitmasks."""

    vertex_count: int
    masks: np.ndarray

    def __len__(self) -> int:
        return int(self.masks.size)

    def subsets(self) -> list[tuple[int, ...]]:
        """Closures as sorted tuples of vertex indices, in increasing mask order."""
        out = []
        for m in sorted(int(x) for x in self.masks):
            out.append(tuple(i for i in range(self.vertex_count) if m >> i & 1))
        return out

    def counts(self) -> list[int]:
        sizes = np.bitwise_count(self.masks.astype(np.uint64))
        return [int(x) for x in np.bincount(sizes, minlength=self.vertex_count + 1)]


def _check_capacity(g: QuiverPath) -> None:
    if g.vertex_count > MAX_VERTICES:
        raise CapacityError(
            f"closure enumeration is limited to {MAX_VERTICES} vertices, got {g.vertex_count}; "
            "use the polynomial routes in qrat instead"
        )


def enumerate_closures(g: QuiverPath) -> ClosureGF:
    """Scan all ``2^n`` vertex subsets and keep the closures."""
    _check_capacity(g)
    n = g.vertex_count
    arrows = g.arrows()
    total = 1 << n
    chunk = 1 << min(n, _CHUNK_BITS)
    found = []
    for start in range(0, total, chunk):
        masks = np.arange(start, start + chunk, dtype=np.int64)
        keep = np.ones(chunk, dtype=bool)
        for s, t in arrows:
            keep &= ~(((masks >> s) & 1).astype(bool) & ~((masks >> t) & 1).astype(bool))
        found.append(masks[keep])
    return ClosureGF(n, np.concatenate(found))


def closure_counts(g: QuiverPath) -> list[int]:
    """Number of closures of each size ``0, ..., n``."""
    return enumerate_closures(g).counts()


def closure_polynomial(g: QuiverPath) -> LaurentPoly:
    """``sum_i (number of i-vertex closures) q^i``.

    >>> closure_polynomial(build_graph((2, 2)))
    LaurentPoly([1, 2, 1, 1])
    """
    return LaurentPoly(closure_counts(g))


def specialize_gf(gf: ClosureGF, weights: Sequence[int]) -> LaurentPoly:
    """Replace vertex variable ``y_i`` by ``q^(weights[i])`` in the sum over closures."""
    if len(weights) != gf.vertex_count:
        raise DomainError(f"need {gf.vertex_count} weights, got {len(weights)}")
    w = np.asarray(weights, dtype=np.int64)
    if gf.vertex_count == 0:
        exps = np.zeros(len(gf), dtype=np.int64)
    else:
        bits = (gf.masks[:, None] >> np.arange(gf.vertex_count, dtype=np.int64)) & 1
        exps = bits @ w
    lo = int(exps.min())
    return LaurentPoly([int(x) for x in np.bincount(exps - lo)], lo)


def jones_closure_counts(a: CFRegular | Sequence[int]) -> list[int]:
    """Closures of :func:`jones_graph` that contain both or neither of the first two vertices, by size."""
    g = jones_graph(a)
    gf = enumerate_closures(g)
    m = gf.masks
    keep = ((m & 1) == ((m >> 1) & 1)) if g.vertex_count >= 2 else np.ones(len(m), dtype=bool)
    sizes = np.bitwise_count(m[keep].astype(np.uint64))
    return [int(x) for x in np.bincount(sizes, minlength=g.vertex_count + 1)]


def sweep_paths(max_vertices: int) -> Iterator[tuple[tuple[str, ...], list[int]]]:
    """Closure counts of every oriented path with 1 to ``max_vertices`` vertices.

    Paths are visited depth first over their direction strings, so the
    closures of a path are obtained from those of the path with its last
    vertex removed: a subset is a closure exactly when its restriction is one
    and the last edge is respected.  Every closure is still listed
    explicitly as a bitmask.
    """
    if max_vertices < 1:
        return
    if max_vertices > MAX_VERTICES:
        raise CapacityError(f"sweep limited to {MAX_VERTICES} vertices")

    def walk(dirs: tuple[str, ...], masks: np.ndarray) -> Iterator[tuple[tuple[str, ...], list[int]]]:
        n = len(dirs) + 1
        sizes = np.bitwise_count(masks.astype(np.uint64))
        yield dirs, [int(x) for x in np.bincount(sizes, minlength=n + 1)]
        if n == max_vertices:
            return
        last = (masks >> (n - 1)) & 1
        bit = np.int64(1) << np.int64(n)
        for d in (LEFT, RIGHT):
            if d == RIGHT:
                # n-1 -> n: a closure holding n-1 must hold n.
                ext = np.concatenate([masks[last == 0], masks | bit])
            else:
                # n -> n-1: a closure holding n must hold n-1.
                ext = np.concatenate([masks, masks[last == 1] | bit])
            yield from walk(dirs + (d,), ext)

    yield from walk((), np.array([0, 1], dtype=np.int64))


def all_direction_strings(length: int) -> Iterator[tuple[str, ...]]:
    """Every direction string with ``length`` edges."""
    return product((LEFT, RIGHT), repeat=length)
