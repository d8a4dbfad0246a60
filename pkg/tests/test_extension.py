import pytest

from colorgder import (Matrix, Subspace, check_identity, make_A, make_D, make_zero, validate)
from colorgder.extension import (ExtensionError, complement_U, decomposition_check,
                                 embedding_checks, extend, identity_preservation, phi, phi_image)
from colorgder.identities import filippov
from colorgder.operators import HomMap, operator_space, projected

from corpus import catalog


def E(d, *idx):
    return [tuple(1 if k == i else 0 for k in range(d)) for i in idx]


def test_extend_A3():
    ext = extend(make_A(3))
    car = ext.carrier
    assert car.dim == 6 and validate(car)
    assert ext.exponents == (1, 1, 1, 3, 3, 3)
    for t, v in car.structure.items():
        assert all(i < 3 for i in t)
        assert v == (0, 0, 0, v[3], 0, 0) and v[3] in (1, -1)
    assert car.product((0, 1, 2)) == (0, 0, 0, 1, 0, 0)
    assert car.product((0, 1, 5)) == (0,) * 6


def test_extend_zero_and_D3():
    assert extend(make_zero(2, 3)).carrier == make_zero(4, 3)
    car = extend(make_D(3)).carrier
    assert car.dim == 8 and check_identity(car, filippov(3))


def test_complement_U_examples():
    assert complement_U(make_A(3)) == Subspace.span(E(3, 1, 2), 3)
    assert complement_U(make_D(3)).is_zero()
    assert complement_U(make_zero(3, 2)).is_full()


def test_phi_examples():
    A = make_A(3)
    ident = Matrix.identity(3)
    P = phi(A, (ident, ident.scale(3))).matrix
    images = [P.apply(v) for v in E(6, *range(6))]
    assert images[:3] == E(6, 0, 1, 2)
    assert images[3] == (0, 0, 0, 3, 0, 0)
    assert images[4] == images[5] == (0,) * 6
    Z = Matrix.zeros(3, 3)
    assert phi(A, (Z, Z)).is_zero()


def test_phi_rejects_non_pairs_and_other_complements():
    A = make_A(3)
    ident = Matrix.identity(3)
    with pytest.raises(ExtensionError):
        phi(A, (ident, ident))
    with pytest.raises(ExtensionError):
        phi(A, (ident, ident.scale(3)), Subspace.span(E(3, 2), 3))


def test_phi_of_D3_pairs_are_derivations():
    D = make_D(3)
    car = extend(D).carrier
    der = projected(car, "der")
    for pr in operator_space(D, "qder").tuples():
        assert der.contains_vector(phi(D, pr).vector)


@pytest.mark.parametrize("alg", [make_A(3), make_D(3)], ids=lambda a: a.name)
def test_decomposition_holds(alg):
    checks = decomposition_check(alg)
    assert [c.status for c in checks] == ["pass", "pass"]


def test_decomposition_skipped_with_center():
    (c,) = decomposition_check(make_zero(2, 2))
    assert c.status == "skip" and "center" in c.reason


@pytest.mark.parametrize("alg", catalog(), ids=lambda a: a.name)
def test_embedding_and_identities(alg):
    for c in embedding_checks(alg) + [identity_preservation(alg)]:
        assert c.status == "pass", c.id
    assert phi_image(alg).dim == projected(alg, "qder").dim


def test_phi_image_is_choice_free_on_A3():
    A = make_A(3)
    ident = Matrix.identity(3)
    # e_1 -> e_2 kills [A, A, A] = span(e_0), so it can be added to D'
    K = Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 0, 0]]).transpose()
    assert not any(K.apply((1, 0, 0)))
    assert phi(A, (ident, ident.scale(3))) == phi(A, (ident, ident.scale(3) + K))
    assert isinstance(phi(A, (HomMap((), ident), HomMap((), ident.scale(3)))), HomMap)
