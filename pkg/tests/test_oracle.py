import random

import numpy as np
import pytest

from hypercert.anf import AnfPolynomial, cut_decompose
from hypercert.f2 import bilinear_slice, rank_f2
from hypercert.generators import all_bipartitions, planted_bridges, random_graph, random_hypergraph
from hypercert.hypergraph import Cut, Hypergraph
from hypercert.oracle import (
    OracleLimits,
    ResourceLimitError,
    build_coefficient_matrix,
    build_sign_matrix,
    real_rank_exact,
    restricted_submatrix,
    schmidt_rank,
)

from oracles import rank_fraction, sign_matrix_from_edges

RANK_DROP_R = [
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
]


def poly(n, *supports):
    return AnfPolynomial.from_monomials(n, supports)


def rank_drop():
    return Hypergraph(4, [{0, 2}, {1, 3}, {0, 1, 2}]), Cut([0, 1], [2, 3])


# -- sign matrices --------------------------------------------------------------


def test_rank_drop_sign_matrix():
    f_ab = poly(4, {0, 2}, {1, 3}, {0, 1, 2})
    m = build_sign_matrix(f_ab, Cut([0, 1], [2, 3]))
    assert m.entries.tolist() == RANK_DROP_R
    assert m.entries.dtype == np.int8


def test_empty_cross_phase_is_all_ones():
    m = build_sign_matrix(AnfPolynomial(2), Cut([0], [1]))
    assert m.entries.tolist() == [[1, 1], [1, 1]]


def test_pure_cubic_sign_matrix():
    m = build_sign_matrix(poly(3, {0, 1, 2}), Cut([0], [1, 2]))
    assert m.entries.tolist() == [[1, 1, 1, 1], [1, 1, 1, -1]]


def test_matches_edge_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 7)
        g = random_hypergraph(rng, n, rng.randint(0, 7), 1, 4)
        cut = Cut(*[sorted(s) for s in _random_split(rng, n)])
        m = build_coefficient_matrix(g.phase_polynomial(), cut)
        assert m.entries.tolist() == sign_matrix_from_edges(g.edges, cut.a_vertices, cut.b_vertices)


def _random_split(rng, n):
    vs = list(range(n))
    rng.shuffle(vs)
    k = rng.randint(1, n - 1)
    return vs[:k], vs[k:]


def test_msb_is_first_listed_vertex():
    # u-order (1, 0): row index 1 means vertex 0 is set
    m = build_sign_matrix(poly(3, {0, 2}), Cut([1, 0], [2]))
    assert m.entries.tolist() == [[1, 1], [1, -1], [1, 1], [1, -1]]


def test_coefficient_matrix_local_terms_only():
    f = poly(4, {0}, {0, 1}, {2, 3})
    m = build_coefficient_matrix(f, Cut([0, 1], [2, 3]))
    e = m.entries.astype(int)
    for row in e:
        assert np.array_equal(row, e[0]) or np.array_equal(row, -e[0])
    assert real_rank_exact(m) == 1


def test_coefficient_matrix_without_local_parts():
    f = poly(4, {0, 2}, {1, 3}, {0, 1, 2})
    cut = Cut([0, 1], [2, 3])
    assert build_coefficient_matrix(f, cut) == build_sign_matrix(f, cut)


def test_local_sign_flip_keeps_rank():
    cut = Cut([0, 1], [2, 3])
    f_ab = poly(4, {0, 2}, {1, 3}, {0, 1, 2})
    m = build_coefficient_matrix(f_ab ^ poly(4, {0}), cut)
    r = np.array(RANK_DROP_R)
    r[2:] *= -1  # rows with u0 = 1
    assert m.entries.tolist() == r.tolist()
    assert real_rank_exact(m) == 3 == rank_fraction(m.entries.tolist())


def test_cap():
    with pytest.raises(ResourceLimitError, match="cap"):
        build_sign_matrix(AnfPolynomial(6), Cut([0, 1, 2], [3, 4, 5]), OracleLimits(max_side=2))
    with pytest.raises(ResourceLimitError):
        build_sign_matrix(AnfPolynomial(6), Cut([0, 1, 2], [3, 4, 5]), OracleLimits(max_total=5))


# -- exact rank -----------------------------------------------------------------


def test_rank_examples():
    assert real_rank_exact(np.array(RANK_DROP_R)) == 3
    assert real_rank_exact(np.ones((4, 4), dtype=np.int8)) == 1
    bilinear = build_sign_matrix(poly(4, {0, 2}, {1, 3}), Cut([0, 1], [2, 3]))
    assert real_rank_exact(bilinear) == 4


def test_rank_drop_minor():
    assert round(np.linalg.det(np.array(RANK_DROP_R)[:3, :3])) == 4


def test_exact_rank_against_fractions_pm1():
    rng = np.random.default_rng(0)
    for _ in range(300):
        r, c = rng.integers(1, 9, size=2)
        m = rng.choice(np.array([-1, 1], dtype=np.int8), size=(r, c))
        if rng.random() < 0.5:
            # force dependencies
            m[-1] = m[0] * -1
        assert real_rank_exact(m) == rank_fraction(m.tolist())


def test_exact_rank_general_integers():
    rng = np.random.default_rng(1)
    for _ in range(200):
        r, c = rng.integers(1, 7, size=2)
        m = rng.integers(-3, 4, size=(r, c))
        assert real_rank_exact(m) == rank_fraction(m.tolist())


def test_exact_rank_promotes_past_int64():
    # Hadamard 32x32: Bareiss pivots reach 32^16 = 2^80
    h = np.array([[1]])
    for _ in range(5):
        h = np.block([[h, h], [h, -h]])
    assert real_rank_exact(h) == 32
    big = np.array([[10**12, 1], [1, 10**12]], dtype=object)
    assert real_rank_exact(big) == 2


def test_empty_matrix_rank():
    assert real_rank_exact(np.zeros((0, 3), dtype=np.int8)) == 0


# -- Schmidt rank ---------------------------------------------------------------


def test_schmidt_rank_examples():
    assert schmidt_rank(Hypergraph(3, [{0, 1, 2}]), Cut([0], [1, 2])) == 2
    g, cut = planted_bridges(3)
    assert schmidt_rank(g, cut) == 8
    assert schmidt_rank(*rank_drop()) == 3


def test_no_cross_edges_rank_one():
    assert schmidt_rank(Hypergraph(4, [{0, 1}, {2, 3}]), Cut([0, 1], [2, 3])) == 1


def test_phase_cleaning_invariance_small():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(2, 7)
        g = random_hypergraph(rng, n, rng.randint(1, 8), 1, 4)
        for cut in all_bipartitions(n):
            f = g.phase_polynomial()
            _, _, f_ab = cut_decompose(f, cut)
            assert real_rank_exact(build_coefficient_matrix(f, cut)) == real_rank_exact(build_sign_matrix(f_ab, cut))


def test_graph_state_rule_small():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 7)
        g = random_graph(rng, n)
        for cut in all_bipartitions(n):
            _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
            assert schmidt_rank(g, cut) == 2 ** rank_f2(bilinear_slice(f_ab, cut))


def test_orthogonality_of_distinct_rows():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(2, 8)
        g = random_graph(rng, n)
        for cut in all_bipartitions(n):
            _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
            rows = np.unique(build_sign_matrix(f_ab, cut).entries.astype(int), axis=0)
            k = rank_f2(bilinear_slice(f_ab, cut))
            assert len(rows) == 2**k
            gram = rows @ rows.T
            assert np.array_equal(gram, np.eye(len(rows), dtype=int) * rows.shape[1])


def test_rank_upper_bound():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(2, 8)
        g = random_hypergraph(rng, n, rng.randint(1, 10), 2, 4)
        cut = Cut(*[sorted(s) for s in _random_split(rng, n)])
        assert schmidt_rank(g, cut) <= 2 ** min(len(cut.a_vertices), len(cut.b_vertices))


# -- submatrices ----------------------------------------------------------------


def test_submatrix_example3():
    g, cut = planted_bridges(3)
    _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
    m = build_sign_matrix(f_ab, cut)
    sub = restricted_submatrix(m, {2: 1, 5: 1, 8: 1})
    assert sub.entries.shape == (8, 8)
    assert sub.col_vertices == (1, 4, 7)
    assert real_rank_exact(sub) == 8 == rank_fraction(sub.entries.tolist())


def test_submatrix_identity_and_full():
    m = build_sign_matrix(poly(4, {0, 2}, {1, 3}, {0, 1, 2}), Cut([0, 1], [2, 3]))
    assert restricted_submatrix(m, {}) == m
    one = restricted_submatrix(m, {0: 1, 1: 1, 2: 1, 3: 0})
    assert one.entries.shape == (1, 1)
    assert real_rank_exact(one) == 1
    # u=(1,1), v=(1,0): u1v1 + u1u2v1 = 0
    assert one.entries[0, 0] == 1


def test_submatrix_unknown_vertex():
    m = build_sign_matrix(AnfPolynomial(2), Cut([0], [1]))
    with pytest.raises(KeyError):
        restricted_submatrix(m, {5: 0})


def test_submatrix_picks_right_entries():
    m = build_sign_matrix(poly(4, {0, 2}, {1, 3}, {0, 1, 2}), Cut([0, 1], [2, 3]))
    sub = restricted_submatrix(m, {0: 1, 3: 0})
    # rows u=(1, u2), cols v=(v1, 0)
    assert sub.entries.tolist() == [[RANK_DROP_R[2][0], RANK_DROP_R[2][2]], [RANK_DROP_R[3][0], RANK_DROP_R[3][2]]]


def test_submatrix_rank_monotone():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(2, 8)
        g = random_hypergraph(rng, n, rng.randint(1, 8), 2, 4)
        cut = Cut(*[sorted(s) for s in _random_split(rng, n)])
        _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
        m = build_sign_matrix(f_ab, cut)
        fixed = {v: rng.randint(0, 1) for v in range(n) if rng.random() < 0.4}
        assert real_rank_exact(restricted_submatrix(m, fixed)) <= real_rank_exact(m)
