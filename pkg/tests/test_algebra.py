import random

import pytest

from colorgder import (AbelianGroup, AlgebraError, Bicharacter, GradedAlgebra, Matrix,
                       Subspace, center, check_gamma_commutative, derived_subalgebra, make_A,
                       make_D, make_LB, make_Lalpha, make_zero, random_matrix, rank, super_sign,
                       validate, validation_errors)
from colorgder.identities import check_identity, filippov

from corpus import catalog


def E(d, i):
    return tuple(1 if k == i else 0 for k in range(d))


@pytest.mark.parametrize("alg", catalog(), ids=lambda a: a.name)
def test_catalog_validates(alg):
    assert validate(alg)


def test_validate_grading_examples():
    Z2 = AbelianGroup((2,))
    ok = GradedAlgebra(1, 3, {(0, 0, 0): (1,)}, Z2, [(1,)], super_sign())
    assert validate(ok)
    Z = AbelianGroup((0,))
    bad = GradedAlgebra(1, 3, {(0, 0, 0): (1,)}, Z, [(1,)], Bicharacter(Z, [[1]]))
    assert not validate(bad)
    assert "degree" in validation_errors(bad)[0]


def test_bicharacter_axiom_failure_invalidates():
    Z2 = AbelianGroup((2,))
    alg = GradedAlgebra(1, 2, {}, Z2, [(0,)], Bicharacter(Z2, [[2]]))
    assert not validate(alg)


def test_A3_products():
    A = make_A(3)
    assert A.product((0, 1, 2)) == (1, 0, 0)
    assert A.product((1, 0, 2)) == (-1, 0, 0)
    assert A.product((2, 0, 1)) == (1, 0, 0)
    assert A.product((0, 0, 1)) == (0, 0, 0)
    assert check_gamma_commutative(A, -1)


def test_D4_sign_rule_literal():
    # [e2, e3, e4] = (-1)^(3+1+1) e1 = -e1 (1-based names)
    D = make_D(3)
    assert D.product((1, 2, 3)) == (-1, 0, 0, 0)
    for i in range(4):
        args = tuple(k for k in range(4) if k != i)
        assert D.product(args) == tuple((-1) ** (3 + i + 1 + 1) if k == i else 0
                                        for k in range(4))
    assert not check_gamma_commutative(D, 1)


def test_D_equals_LB_identity():
    for n in (2, 3, 4):
        I = Matrix.identity(n + 1)
        assert make_D(n) == make_LB(n, I)


def test_Lalpha_zero_is_zero_algebra():
    assert make_Lalpha(3, 0) == make_zero(1, 3)
    assert check_gamma_commutative(make_Lalpha(2, 5), 1)
    assert not check_gamma_commutative(make_Lalpha(3, 5), -1)


def test_LB_rejects_wrong_shape():
    with pytest.raises(AlgebraError):
        make_LB(3, Matrix.identity(3))


def test_filippov_identity_on_D():
    for n in (2, 3):
        assert check_identity(make_D(n), filippov(n))
    assert not check_identity(make_LB(2, Matrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]])),
                              filippov(2))


def test_derived_subalgebra_examples():
    assert derived_subalgebra(make_A(3)) == Subspace.span([E(3, 0)], 3)
    assert derived_subalgebra(make_D(3)).is_full()
    assert derived_subalgebra(make_zero(3, 2)).is_zero()


def test_rank_B_equals_dim_derived():
    rng = random.Random(3)
    for k in range(12):
        B = random_matrix(4, rng, rank_target=1 + k % 4)
        assert derived_subalgebra(make_LB(3, B)).dim == rank(B)


def _center_oracle(alg):
    """Brute force: unknown z, every slot and basis tuple gives linear equations."""
    import itertools
    from colorgder.linalg import nullspace_rows
    d, n = alg.dim, alg.arity
    rows = []
    for s in range(n):
        for others in itertools.product(range(d), repeat=n - 1):
            for j in range(d):
                row = []
                for k in range(d):
                    t = others[:s] + (k,) + others[s:]
                    row.append(alg.c(t, j))
                rows.append(row)
    return nullspace_rows(rows, d, alg.field)


@pytest.mark.parametrize("alg", catalog(), ids=lambda a: a.name)
def test_center_matches_oracle(alg):
    assert center(alg) == _center_oracle(alg)


def test_center_examples():
    assert center(make_A(3)).is_zero()
    assert center(make_D(3)).is_zero()
    assert center(make_zero(2, 3)).is_full()


def test_build_closure_conflict():
    # [e0, e0] = e0 cannot be antisymmetric
    with pytest.raises(AlgebraError):
        GradedAlgebra.build(1, 2, {(0, 0): {0: 1}}, "antisymmetrize")


def test_build_color_antisymmetrization_uses_bicharacter():
    Z2 = AbelianGroup((2,))
    # odd-odd bracket is symmetric in a color Lie superalgebra
    alg = GradedAlgebra.build(2, 2, {(1, 1): {0: 1}}, "antisymmetrize", group=Z2,
                              degrees=[(0,), (1,)], eps=super_sign())
    assert alg.product((1, 1)) == (1, 0)
    assert check_gamma_commutative(alg, -1)


def test_equality_ignores_name():
    assert make_A(3).relabel("x") == make_A(3)
