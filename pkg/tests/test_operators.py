import itertools
from fractions import Fraction

import pytest

from colorgder import (QQ, AbelianGroup, GradedAlgebra, Matrix, Subspace, make_A, make_D,
                       make_Lalpha, make_zero, super_sign)
from colorgder.identities import associativity, check_identity, gamma_commutativity
from colorgder.linalg import nullspace_rows
from colorgder.operators import (HomMap, OperatorError, closure_check, color_bracket, defect,
                                 gder_decomposition_check, inclusion_chain, jordan_product,
                                 materialize, operator_space, project, projected,
                                 projected_all, qc_structure_report, realizable_degrees)

from corpus import catalog


def unit(d, i, j):
    """Matrix sending e_i to e_j."""
    return Matrix.from_rows([[1 if (r, c) == (j, i) else 0 for c in range(d)]
                             for r in range(d)])


def _der_oracle_dim(alg):
    """Nullity of the derivation system built by evaluating brackets slot by slot.

    The residual is linear in the unknown matrix, so its coefficient on each
    unknown entry is the residual of the corresponding matrix unit.
    """
    d, n = alg.dim, alg.arity
    E = [alg.basis_vector(i) for i in range(d)]
    units = [(a, b) for a in range(d) for b in range(d)]
    rows = []
    for t in itertools.product(range(d), repeat=n):
        cols = []
        for a, b in units:
            M = unit(d, b, a)  # entry (a, b)
            lhs = [0] * d
            for s in range(n):
                args = [E[i] for i in t]
                args[s] = M.apply(args[s])
                lhs = [x + y for x, y in zip(lhs, alg.bracket(*args))]
            rhs = M.apply(alg.bracket(*[E[i] for i in t]))
            cols.append([x - y for x, y in zip(lhs, rhs)])
        for j in range(d):
            rows.append([cols[k][j] for k in range(len(units))])
    return nullspace_rows(rows, d * d, QQ).dim


@pytest.mark.parametrize("alg", [make_A(3), make_A(2), make_D(2), make_D(3), make_Lalpha(2, 1)],
                         ids=lambda a: a.name)
def test_der_dimension_matches_brute_force(alg):
    assert operator_space(alg, "der").dim == _der_oracle_dim(alg)


def test_der_A3_dimension():
    assert operator_space(make_A(3), "der").dim == 6


def test_spec_examples():
    A = make_A(3)
    assert operator_space(A, "end").dim == 9
    assert operator_space(make_Lalpha(3, 1), "der").dim == 0
    for alg in catalog():
        ident = Matrix.identity(alg.dim)
        assert operator_space(alg, "centroid").basis.contains_vector(ident.entries)


def test_projections_of_A3():
    sp = operator_space(make_A(3), "qder")
    assert project(sp, "LL").is_full()
    assert not project(sp, "KS").is_full()
    assert project(operator_space(make_zero(2, 3), "qder"), "LL").is_full()
    with pytest.raises(OperatorError):
        project(operator_space(make_A(3), "der"), "LL")


@pytest.mark.parametrize("alg", catalog(), ids=lambda a: a.name)
@pytest.mark.parametrize("cls", ["der", "gder", "qder", "centroid", "qcentroid", "zder"])
def test_basis_resubstitution(alg, cls):
    # every solution satisfies the equations evaluated directly on brackets
    for th in realizable_degrees(alg):
        sp = operator_space(alg, cls, th)
        for tup in sp.tuples():
            assert not defect(alg, cls, tup, th)
            assert not defect(alg, cls, [HomMap(th, m.matrix.scale(Fraction(3, 7)))
                                         for m in tup], th)


def test_defect_detects_non_solutions():
    A = make_A(3)
    ident = Matrix.identity(3)
    assert defect(A, "der", [ident])
    assert not defect(A, "qder", [ident, ident.scale(3)])


def test_zero_algebra_everything_is_end():
    Z = make_zero(2, 3)
    for cls in ("der", "centroid", "qcentroid", "zder"):
        assert operator_space(Z, cls).basis.is_full()
    assert closure_check(Z, "bracket", "end", "end", "zder")


def test_bracket_and_jordan_examples():
    triv = make_zero(2, 2).eps
    e12, e21 = HomMap((), unit(2, 0, 1)), HomMap((), unit(2, 1, 0))
    assert color_bracket(e12, e21, triv).matrix == (e12.matrix @ e21.matrix) - (e21.matrix @ e12.matrix)
    D = HomMap((), Matrix.from_rows([[1, 2], [3, 4]]))
    assert color_bracket(D, D, triv).is_zero()
    assert jordan_product(HomMap((), Matrix.identity(2)), D, triv).matrix == D.matrix.scale(2)
    # odd maps anticommute under the super sign: [D, D] = 2 D^2
    odd = HomMap((1,), Matrix.from_rows([[0, 1], [1, 0]]))
    assert color_bracket(odd, odd, super_sign()).matrix == Matrix.identity(2).scale(2)
    assert color_bracket(odd, odd, super_sign()).degree == (0,)


def test_matrix_commutator_convention():
    triv_alg = make_zero(2, 2)
    e12, e21 = HomMap((), unit(2, 0, 1)), HomMap((), unit(2, 1, 0))
    br = color_bracket(e12, e21, triv_alg.eps)
    # e12 e21: e2 -> e1 -> e2 ; e21 e12: e1 -> e2 -> e1
    assert br.matrix.apply((0, 1)) == (0, 1)
    assert br.matrix.apply((1, 0)) == (-1, 0)


def test_closure_examples():
    assert closure_check(make_D(3), "bracket", "gder", "gder", "gder")
    assert closure_check(make_A(3), "compose", "centroid", "der", "der")


def test_qc_report_examples():
    r = qc_structure_report(make_A(3))
    assert r["c_qc_into_center"] and r["c_qc_zero"] == "pass"
    rz = qc_structure_report(make_zero(2, 2))
    assert rz["qc_dim"] == 4 and rz["bracket_closed"]
    assert rz["c_qc_zero"].startswith("skip")
    rd = qc_structure_report(make_D(3))
    assert rd["lie_iff_abelian"] == "pass"


def test_gder_decomposition_examples():
    for alg in (make_A(3), make_D(3), make_zero(2, 3)):
        assert gder_decomposition_check(alg)


def test_materialize_examples():
    J = materialize(make_A(3), "qcentroid", "jordan")
    from colorgder.identities import jordan
    assert all(check_identity(J, i) for i in jordan())
    L = materialize(make_D(3), "der", "bracket")
    assert check_identity(L, gamma_commutativity(2, -1)[0])
    C = materialize(make_zero(2, 2), "centroid", "compose")
    assert check_identity(C, associativity())
    assert C.dim == 4


def test_materialize_rejects_unclosed_family():
    sp = {(): Subspace.span([unit(2, 0, 1).entries, unit(2, 1, 0).entries], 4)}
    with pytest.raises(OperatorError):
        materialize(make_zero(2, 2), sp, "compose")


def test_inclusion_chain_on_catalog():
    for alg in catalog():
        assert all(inclusion_chain(alg).values())


def _ks_with_zero_ll(alg):
    """KS parts of the pairs whose LL part vanishes (dependent LL families)."""
    sp = operator_space(alg, "qder")
    dd = alg.dim ** 2
    # pairs are rows (LL | KS); eliminate the LL block
    rows = [list(v[:dd]) + list(v[dd:]) for v in sp.basis.basis]
    zero_ll = [v[dd:] for v in Subspace.span(rows, 2 * dd).basis if not any(v[:dd])]
    return [Matrix(alg.dim, alg.dim, tuple(v), QQ) for v in zero_ll]


@pytest.mark.parametrize("alg", [make_A(3), make_D(3), make_D(2), make_zero(2, 2)],
                         ids=lambda a: a.name)
def test_dependent_ll_family_has_dependent_ks_on_derived(alg):
    from colorgder import derived_subalgebra
    L2 = derived_subalgebra(alg)
    Ks = _ks_with_zero_ll(alg)
    for K in Ks:
        assert all(not any(K.apply(b)) for b in L2.basis)
    # the KS parts are exactly the maps vanishing on L^2
    assert len(Ks) == alg.dim * (alg.dim - L2.dim)


def test_explicit_dependent_family_on_D3():
    D = make_D(3)
    p = operator_space(D, "qder").tuples()
    c = (2, -1, 3)
    ll = [sum(c[k] * p[k][0].vector[e] for k in range(3)) for e in range(16)]
    ks = [sum(c[k] * p[k][1].vector[e] for k in range(3)) for e in range(16)]
    # the family (p0, p1, p2, -(c0 p0 + c1 p1 + c2 p2)) is dependent in LL, hence in KS on L^2 = L
    assert not defect(D, "qder", [Matrix(4, 4, tuple(ll), QQ), Matrix(4, 4, tuple(ks), QQ)])
    assert not defect(D, "qder", [Matrix.zeros(4, 4), Matrix.zeros(4, 4)])
    assert _ks_with_zero_ll(D) == []


def test_color_graded_degrees():
    Z2 = AbelianGroup((2,))
    alg = GradedAlgebra.build(2, 2, {(1, 1): {0: 1}}, "antisymmetrize", group=Z2,
                              degrees=[(0,), (1,)], eps=super_sign())
    assert realizable_degrees(alg) == [(0,), (1,)]
    for th in realizable_degrees(alg):
        for D, in operator_space(alg, "der", th).tuples():
            assert D.degree == th
    assert all(inclusion_chain(alg).values())
    assert set(projected_all(alg, "der")) == {(0,), (1,)}
    assert projected(alg, "end", (1,)).dim == 2
