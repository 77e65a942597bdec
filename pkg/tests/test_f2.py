import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypercert.anf import AnfPolynomial
from hypercert.f2 import ContractError, F2Matrix, bilinear_slice, is_purely_bilinear, rank_f2
from hypercert.hypergraph import Cut

from oracles import rank_f2_by_span


@st.composite
def f2_matrices(draw, max_rows=8, max_cols=8):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(0, max_cols))
    bits = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows))
    return F2Matrix(rows, cols, tuple(bits))


def test_rank_examples():
    assert rank_f2(F2Matrix.identity(2)) == 2
    assert rank_f2(F2Matrix.zeros(3, 3)) == 0
    assert rank_f2(F2Matrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rank_f2(F2Matrix(0, 0, ())) == 0


def test_rank_dependent_rows():
    m = F2Matrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert rank_f2(m) == 2


def test_bad_bits():
    with pytest.raises(ValueError):
        F2Matrix(1, 2, (4,))
    with pytest.raises(ValueError):
        F2Matrix.from_rows([[1, 2]])


@given(f2_matrices())
def test_rank_transpose(m):
    assert rank_f2(m) == rank_f2(m.transpose())


@given(f2_matrices(max_rows=5, max_cols=5))
def test_rank_matches_span_size(m):
    assert rank_f2(m) == rank_f2_by_span(m.to_rows())


def test_rank_random_against_span():
    rng = np.random.default_rng(3)
    for _ in range(300):
        r, c = rng.integers(1, 6, size=2)
        rows = rng.integers(0, 2, size=(r, c)).tolist()
        assert rank_f2(F2Matrix.from_rows(rows)) == rank_f2_by_span(rows)


def test_transpose_round_trip():
    m = F2Matrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert m.transpose().to_rows() == [[1, 0], [0, 1], [1, 1]]
    assert m.transpose().transpose() == m


# -- bilinear slice -------------------------------------------------------------


def poly(n, *supports):
    return AnfPolynomial.from_monomials(n, supports)


def test_slice_two_bridges():
    g = bilinear_slice(poly(4, {0, 2}, {1, 3}), Cut([0, 1], [2, 3]))
    assert g.is_identity()


def test_slice_pure_cubic_is_zero():
    g = bilinear_slice(poly(3, {0, 1, 2}), Cut([0], [1, 2]))
    assert (g.rows, g.cols) == (1, 2)
    assert g == F2Matrix.zeros(1, 2)


def test_slice_rank_drop_instance():
    f = poly(4, {0, 2}, {1, 3}, {0, 1, 2})
    g = bilinear_slice(f, Cut([0, 1], [2, 3]))
    assert g.to_rows() == [[1, 0], [0, 1]]
    assert rank_f2(g) == 2
    assert not is_purely_bilinear(f)


def test_slice_follows_cut_order():
    g = bilinear_slice(poly(4, {0, 3}), Cut([1, 0], [2, 3]))
    assert g.to_rows() == [[0, 0], [0, 1]]


def test_slice_rejects_local_monomials():
    with pytest.raises(ContractError):
        bilinear_slice(poly(3, {0, 1}), Cut([0, 1], [2]))
    with pytest.raises(ContractError):
        bilinear_slice(poly(2, set()), Cut([0], [1]))


@st.composite
def cross_polys(draw):
    a = draw(st.integers(1, 3))
    b = draw(st.integers(1, 3))
    n = a + b
    a_mask, b_mask = (1 << a) - 1, ((1 << n) - 1) ^ ((1 << a) - 1)
    cross = [m for m in range(1 << n) if m & a_mask and m & b_mask]
    f = draw(st.sets(st.sampled_from(cross)))
    g = draw(st.sets(st.sampled_from(cross)))
    cut = Cut(range(a), range(a, n))
    return AnfPolynomial(n, frozenset(f)), AnfPolynomial(n, frozenset(g)), cut


@given(cross_polys())
def test_slice_is_linear(case):
    f, g, cut = case
    assert bilinear_slice(f ^ g, cut) == bilinear_slice(f, cut) ^ bilinear_slice(g, cut)
