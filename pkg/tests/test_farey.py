import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrational.contfrac import CFRegular, Rational, expand_negative, expand_regular
from qrational.errors import DomainError
from qrational.farey import (
    PtolemyWeights,
    QuiddityClass,
    fan_diagonal,
    fan_polygon,
    farey_node,
    farey_tree,
    initial_weights,
    neighbor_weight,
    positivity_diff,
    ptolemy_chain,
    ptolemy_solve,
    ptolemy_system,
    ptolemy_violations,
    quiddity_classify,
    quiddity_scalar,
    random_triangulation,
    surgery_break,
    surgery_insert,
    triangulation_build,
    weighted_mediant,
)
from qrational.qpoly import ONE, LaurentPoly, monomial, q_int
from qrational.qrat import matrix_neg, qdeform
from qrational.verify import DECAGON, coprime_pairs

P = LaurentPoly
R = Rational


def node(r, s):
    return farey_node(R(r, s))


@pytest.mark.parametrize(
    "left, right, value, ell, num, den",
    [
        ((1, 1), (2, 1), (3, 2), 1, [1, 1, 1], [1, 1]),
        ((4, 3), (3, 2), (7, 5), 2, [1, 1, 2, 2, 1], [1, 1, 2, 1]),
        ((1, 1), (1, 0), (2, 1), 1, [1, 1], [1]),
        ((2, 1), (1, 0), (3, 1), 2, [1, 1, 1], [1]),
    ],
)
def test_weighted_mediant_examples(left, right, value, ell, num, den):
    child, got = weighted_mediant(node(*left), node(*right))
    assert child.value == R(*value)
    assert got == ell
    assert (child.label.num, child.label.den) == (P(num), P(den))


def test_weighted_mediant_rejects_non_neighbours():
    with pytest.raises(DomainError):
        weighted_mediant(node(1, 1), node(3, 1))
    with pytest.raises(DomainError):
        weighted_mediant(node(2, 1), node(1, 1))


def test_tree_depth_zero_is_the_root_triangle():
    assert [str(e.node.value) for e in farey_tree(0)] == ["1/1", "2/1", "1/0"]


def test_tree_depth_two_examples():
    entries = {str(e.node.value): e for e in farey_tree(2)}
    e = entries["5/3"]
    assert (e.node.label.num, e.node.label.den) == (P([1, 1, 2, 1]), P([1, 1, 1]))
    e = entries["4/1"]
    assert e.node.label.num == q_int(4)
    assert e.ell == 3
    assert sorted(entries) == sorted(["1/1", "2/1", "1/0", "3/2", "3/1", "4/3", "5/3", "5/2", "4/1"])


def test_tree_labels_equal_qdeform():
    for e in farey_tree(8):
        qr = qdeform(e.node.value)
        assert (e.node.label.num, e.node.label.den) == (qr.num, qr.den)


def test_tree_json_exposes_parent_weight():
    data = {d["value"]: d for d in (e.to_json() for e in farey_tree(2))}
    assert data["4/1"]["parent_edge_weight_exponent"] == 2
    assert data["5/3"]["parent_edge_weight_exponent"] == 1
    assert data["5/2"]["parent_edge_weight_exponent"] == 0
    assert data["4/1"]["num"] == {"min_exp": 0, "coeffs": ["1", "1", "1", "1"]}


def test_positivity_examples():
    assert positivity_diff(R(5, 2), R(5, 3)) == P([0, 1, 1, 1, 1, 1])
    assert positivity_diff(R(5, 2), R(2, 1)) == monomial(3)
    assert positivity_diff(R(7, 3), R(7, 3)).is_zero()
    with pytest.raises(DomainError):
        positivity_diff(R(2, 1), R(5, 2))


@pytest.mark.parametrize("x, y, alpha", [((5, 2), (2, 1), 3), ((2, 1), (3, 2), 1), ((3, 2), (7, 5), 2)])
def test_neighbor_weight_examples(x, y, alpha):
    assert neighbor_weight(R(*x), R(*y)) == alpha
    assert positivity_diff(R(*x), R(*y)) == monomial(alpha)


def test_neighbor_weight_needs_neighbours():
    with pytest.raises(DomainError):
        neighbor_weight(R(5, 2), R(5, 3))


def test_neighbor_weight_over_small_range():
    xs = sorted([R(1, 0), R(0, 1), R(1, 1)] + list(coprime_pairs(16)))
    for y, x in combinations(xs, 2):
        if x.r * y.s - x.s * y.r == 1:
            assert positivity_diff(x, y) == monomial(neighbor_weight(x, y))


def test_surgery_examples():
    assert surgery_insert((3, 2), 1) == (4, 1, 3)
    assert matrix_neg((4, 1, 3)) == matrix_neg((3, 2)).scale(monomial(1))
    assert surgery_break((3,), 1, 2) == (2, 1, 1, 2)
    assert matrix_neg((2, 1, 1, 2)) == -matrix_neg((3,))
    with pytest.raises(DomainError):
        surgery_insert((3,), 1)
    with pytest.raises(DomainError):
        surgery_break((3,), 1, 4)


@given(
    st.lists(st.integers(min_value=1, max_value=6), min_size=2, max_size=8).map(tuple),
    st.data(),
)
def test_surgery_identities(c, data):
    i = data.draw(st.integers(min_value=1, max_value=len(c) - 1))
    assert matrix_neg(surgery_insert(c, i)) == matrix_neg(c).scale(monomial(1))
    j = data.draw(st.integers(min_value=1, max_value=len(c)))
    first = data.draw(st.integers(min_value=1, max_value=c[j - 1]))
    assert matrix_neg(surgery_break(c, j, first)) == -matrix_neg(c)


def test_quiddity_examples():
    assert quiddity_classify((1, 1, 1)) is QuiddityClass.TRIANGULATION
    assert quiddity_classify(DECAGON) is QuiddityClass.TRIANGULATION
    assert quiddity_scalar(DECAGON) == monomial(7, -1)
    assert quiddity_classify((3, 2, 1, 3, 2, 1)) is QuiddityClass.TRIANGULATION
    assert quiddity_scalar((3, 2, 1, 3, 2, 1)) == monomial(3, -1)
    assert quiddity_classify((2, 2, 2, 2)) is QuiddityClass.NEITHER
    with pytest.raises(DomainError):
        quiddity_classify((1, 1))


@pytest.mark.parametrize(
    "c, scalar",
    [
        ((1, 1, 1, 1, 1, 1), monomial(0)),
        ((2, 1, 1, 1, 1, 2, 1), monomial(1)),
        ((2, 1, 1, 1, 1, 2, 1, 1, 1, 1), monomial(1, -1)),
        ((1,) * 9, monomial(0, -1)),
    ],
)
def test_three_d_dissections(c, scalar):
    # A hexagon piece lowers the exponent below n - 3.
    assert quiddity_scalar(c) == scalar
    assert quiddity_classify(c) is QuiddityClass.THREE_D_DISSECTION


def test_scalar_exponent_is_half_the_determinant_degree():
    from itertools import product

    counts = {}
    for n in range(3, 7):
        for c in product(range(1, n - 1), repeat=n):
            x = quiddity_scalar(c)
            if x is None:
                assert quiddity_classify(c) is QuiddityClass.NEITHER
                continue
            e, odd = divmod(sum(c) - n, 2)
            assert not odd and x in (monomial(e), monomial(e, -1))
            counts[quiddity_classify(c)] = counts.get(quiddity_classify(c), 0) + 1
    # 1 + 2 + 5 + 14 triangulations, and the hexagon itself
    assert counts == {QuiddityClass.TRIANGULATION: 22, QuiddityClass.THREE_D_DISSECTION: 1}


def test_triangulation_examples():
    t = triangulation_build(CFRegular((2, 2)))
    assert t.n == 6
    assert [str(v) for v in t.labels_from(1)] == ["1/0", "3/1", "5/2", "2/1", "1/1", "0/1"]
    assert t.quiddity_from(1) == (3, 2, 1, 3, 2, 1)
    t = triangulation_build(CFRegular((1, 1, 1, 1)))
    assert t.n == 6 and t.vertex_labels[3] == R(5, 3)
    t = triangulation_build(CFRegular((1, 1)))
    assert t.n == 4 and t.vertex_labels[2] == R(2, 1)


def test_triangulations_over_range():
    for x in coprime_pairs(40):
        a = expand_regular(x)
        t = triangulation_build(a)
        assert len(t.triangles) == t.n - 2
        assert t.vertex_labels[t.k + 1] == x
        assert t.quiddity_from(1)[: t.k] == expand_negative(x).c
        assert quiddity_scalar(t.quiddity) == monomial(t.n - 3, -1)
        # every edge of the snake joins Farey neighbours
        for u, v in t.edges():
            lu, lv = t.vertex_labels[u], t.vertex_labels[v]
            assert abs(lu.r * lv.s - lu.s * lv.r) == 1


def test_random_triangulations():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(3, 12)
        t = random_triangulation(n, rng)
        assert len(t.triangles) == n - 2
        assert sum(t.quiddity) == 3 * (n - 2)
        assert quiddity_classify(t.quiddity) is QuiddityClass.TRIANGULATION


def test_ptolemy_examples():
    x0, x1 = ptolemy_solve(R(5, 2))
    assert x0.shift(3) == P([1, 2, 1, 1])
    x0, x1 = ptolemy_solve(R(7, 5))
    assert x0.shift(4) == P([1, 1, 2, 2, 1])
    assert x1.shift(4) == P([1, 1, 2, 1])
    tri, w = fan_polygon(3, 0)
    assert fan_diagonal(w, 4, [0, 1, 2, 3]) == q_int(3).shift(-2)


def test_ptolemy_over_range():
    for x in coprime_pairs(20):
        qr = qdeform(x)
        tri = triangulation_build(expand_regular(x))
        x0, x1 = ptolemy_solve(x)
        assert x0.shift(tri.n - 3) == qr.num
        assert x1.shift(tri.n - 3) == qr.den
        full = ptolemy_system(tri, initial_weights(tri))
        assert ptolemy_violations(full) == []
        assert full[0, tri.k + 1] == x0 and full[1, tri.k + 1] == x1


def test_initial_weights_of_the_pentagon():
    tri = triangulation_build(CFRegular((2, 1)))
    w = initial_weights(tri)
    bases = {t.base: (t.index, t.base_down) for t in tri.snake}
    for base, (index, down) in bases.items():
        assert w[base] == monomial(index if down else -index)
    assert len(w) == 2 * tri.n - 3


@pytest.mark.parametrize("c", range(2, 9))
@pytest.mark.parametrize("beta", range(0, 4))
def test_fan_lemma(c, beta):
    tri, w = fan_polygon(c, beta)
    assert fan_diagonal(w, c + 1, list(range(c + 1))) == q_int(c).shift(-(beta + c - 1))
    full = ptolemy_system(tri, w)
    assert full[0, c] == q_int(c).shift(-(beta + c - 1))
    assert ptolemy_violations(full) == []


def test_ptolemy_chain_on_unit_square():
    w = PtolemyWeights(4, {(0, 1): ONE, (1, 2): ONE, (2, 3): ONE, (0, 3): ONE, (0, 2): ONE, (1, 3): P([2])})
    assert ptolemy_chain(w, [0, 1, 2]) == ONE
    assert w[1, 1].is_zero()
    with pytest.raises(DomainError):
        w[2, 2] = ONE
