from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from colorgder import (GF, QQ, Matrix, Subspace, is_direct_sum, nullspace, rank, rref,
                       subspace_contains, subspace_intersect, subspace_sum)
from colorgder.linalg import DimensionMismatch

import pytest


def M(rows, field=QQ):
    return Matrix.from_rows(rows, field)


def test_rref_examples():
    r, piv = rref(M([[1, 2], [2, 4]]))
    assert r.tolist() == [[1, 2], [0, 0]] and piv == [0]
    r, piv = rref(Matrix.identity(3))
    assert r == Matrix.identity(3) and piv == [0, 1, 2]
    r, piv = rref(M([[0, 1], [1, 0]]))
    assert r.tolist() == [[1, 0], [0, 1]] and piv == [0, 1]


def test_rref_rational_entries():
    r, piv = rref(M([[Fraction(1, 2), 1, 0], [1, 0, Fraction(1, 3)]]))
    assert piv == [0, 1]
    assert r.tolist() == [[1, 0, Fraction(1, 3)], [0, 1, Fraction(-1, 6)]]


def test_nullspace_examples():
    assert nullspace(M([[1, 2], [2, 4]])) == Subspace.span([(-2, 1)], 2)
    assert nullspace(Matrix.identity(2)).is_zero()
    assert nullspace(Matrix.zeros(2, 3)).is_full()


def test_lattice_examples():
    a = Subspace.span([(1, 0)], 2)
    b = Subspace.span([(0, 1)], 2)
    assert subspace_intersect(a, b).is_zero()
    assert subspace_sum(a, b).is_full()
    assert is_direct_sum(a, b, Subspace.full(2))
    assert subspace_contains(Subspace.span([(1, 0), (0, 1)], 2), Subspace.span([(1, 1)], 2))
    assert not is_direct_sum(a, a, Subspace.full(2))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        subspace_sum(Subspace.zero(2), Subspace.zero(3))


def test_prime_field_elimination():
    F = GF(5)
    m = M([[1, 2], [3, 1]], F)  # det = -5 = 0 mod 5
    assert rank(m) == 1
    v = nullspace(m).basis[0]
    assert m.apply(v) == (F.zero, F.zero)


small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return M(rows)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(m):
    ker = nullspace(m)
    assert ker.dim == m.cols - rank(m)
    for v in ker.basis:
        assert not any(m.apply(v))
    r, piv = rref(m)
    assert rank(r) == rank(m) == len(piv)


@settings(max_examples=150, deadline=None)
@given(matrices(max_rows=4, max_cols=5), matrices(max_rows=4, max_cols=5))
def test_modular_law(a, b):
    if a.cols != b.cols:
        return
    A = Subspace.span(a.tolist(), a.cols)
    B = Subspace.span(b.tolist(), b.cols)
    s, i = subspace_sum(A, B), subspace_intersect(A, B)
    assert s.dim + i.dim == A.dim + B.dim
    assert subspace_contains(A, i) and subspace_contains(B, i)
    assert subspace_contains(s, A) and subspace_contains(s, B)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_span_is_canonical_under_permutation_and_scaling(m, rnd):
    rows = m.tolist()
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    scaled = [[x * (k + 2) for x in r] for k, r in enumerate(shuffled)]
    assert Subspace.span(rows, m.cols) == Subspace.span(scaled, m.cols)


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_rational_and_modular_rank_agree_generically(m):
    # reduction mod a large prime can only drop the rank
    assert rank(Matrix.from_rows(m.tolist(), GF(1000003))) <= rank(m)
