"""The doubled algebra ``T t + T t^n`` and the embedding of quasiderivations.

Basis of the carrier: ``e_0 t, ..., e_{d-1} t`` followed by
``e_0 t^n, ..., e_{d-1} t^n``.  Brackets multiply the t-powers, so only
brackets of ``t``-elements survive: ``[x_1 t, ..., x_n t] = [x_1, ..., x_n] t^n``.
The indeterminate ``t`` has degree zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import GradedAlgebra, center, derived_subalgebra, require_valid
from .linalg import Matrix, Subspace, is_direct_sum, nullspace_rows, subspace_contains
from .operators import (HomMap, defect, operator_space, projected,
                        realizable_degrees)
from .report import Check


class ExtensionError(ValueError):
    pass


@dataclass(frozen=True)
class ExtendedAlgebra:
    base: GradedAlgebra
    carrier: GradedAlgebra
    exponents: tuple  # t-exponent of each carrier basis vector


def extend(alg: GradedAlgebra) -> ExtendedAlgebra:
    require_valid(alg)
    d, n = alg.dim, alg.arity
    z = alg.field.zero
    struct = {}
    for t, vec in alg.structure.items():
        struct[t] = (z,) * d + tuple(vec)
    carrier = GradedAlgebra(2 * d, n, struct, alg.group, alg.degrees + alg.degrees,
                            alg.eps, alg.field, f"{alg.name or 'T'}~")
    return ExtendedAlgebra(alg, carrier, (1,) * d + (n,) * d)


def complement_U(alg: GradedAlgebra) -> Subspace:
    """Coordinate complement of ``[T, ..., T]``: the non-pivot basis vectors."""
    t2 = derived_subalgebra(alg)
    piv = set(t2.pivots)
    return Subspace.span([alg.basis_vector(i) for i in range(alg.dim) if i not in piv],
                         alg.dim, alg.field)


def _derived_projection(alg: GradedAlgebra) -> Matrix:
    """Projection onto ``[T, ..., T]`` along :func:`complement_U`."""
    t2 = derived_subalgebra(alg)
    d = alg.dim
    z = alg.field.zero
    cols = []
    for i in range(d):
        # e_i = u + b with b = sum_r (e_i)[pivot_r] row_r
        b = [z] * d
        for row, p in zip(t2.basis, t2.pivots):
            if p == i:
                b = list(row)
        cols.append(b)
    return Matrix(d, d, tuple(cols[i][j] for j in range(d) for i in range(d)), alg.field)


def phi(alg: GradedAlgebra, pair, U: Subspace | None = None) -> HomMap:
    """``a t + u t^n + b t^n  |->  D(a) t + D'(b) t^n`` on the carrier.

    ``pair`` is ``(D, D')`` (HomMaps or matrices) satisfying the
    quasiderivation equations; ``U`` must be :func:`complement_U` (the only
    complement the projection is built for).
    """
    D, Dp = pair
    deg = D.degree if isinstance(D, HomMap) else alg.group.zero
    Dm = D.matrix if isinstance(D, HomMap) else D
    Dpm = Dp.matrix if isinstance(Dp, HomMap) else Dp
    if defect(alg, "qder", (Dm, Dpm), deg):
        raise ExtensionError("pair is not a quasiderivation pair")
    if U is not None and U != complement_U(alg):
        raise ExtensionError("phi is built against the coordinate complement of [T,...,T]")
    return HomMap(deg, _phi_matrix(alg, Dm, Dpm))


def _phi_matrix(alg: GradedAlgebra, Dm: Matrix, Dpm: Matrix) -> Matrix:
    d = alg.dim
    z = alg.field.zero
    P = _derived_projection(alg)
    DpP = Dpm @ P
    ent = [[z] * (2 * d) for _ in range(2 * d)]
    for j in range(d):
        for i in range(d):
            ent[j][i] = Dm[j, i]
            ent[d + j][d + i] = DpP[j, i]
    return Matrix.from_rows(ent, alg.field)


def phi_image(alg: GradedAlgebra, theta=None) -> Subspace:
    """``phi(QDer(T))`` at one degree, inside End of the carrier."""
    sp = operator_space(alg, "qder", theta)
    dd = (2 * alg.dim) ** 2
    vecs = [_phi_matrix(alg, D.matrix, Dp.matrix).entries for D, Dp in sp.tuples()]
    return Subspace.span(vecs, dd, alg.field)


def decomposition_check(alg: GradedAlgebra) -> list[Check]:
    """``Der(T~) = phi(QDer(T)) (+) ZDer(T~)`` and ``Z(T~) = T t^n``.

    Skipped (one skip record) when the center of ``alg`` is nonzero.
    """
    require_valid(alg)
    anchor = "Der(T~) = phi(QDer(T)) (+) ZDer(T~) when Z(T) = 0"
    z = center(alg)
    if not z.is_zero():
        return [Check.skipped("ext-der-decomposition", anchor,
                              f"center of the algebra has dimension {z.dim}")]
    ext = extend(alg)
    car = ext.carrier
    d = alg.dim
    checks = []
    ok = True
    wit = {}
    for th in realizable_degrees(alg):
        der = projected(car, "der", th)
        img = phi_image(alg, th)
        zd = projected(car, "zder", th)
        good = is_direct_sum(img, zd, der)
        wit[str(list(th))] = {"der": der.dim, "phi_qder": img.dim, "zder": zd.dim}
        ok = ok and good
    checks.append(Check.of("ext-der-decomposition", anchor, ok, dims=wit))
    ztil = center(car)
    ttn = Subspace.span([car.basis_vector(d + i) for i in range(d)], 2 * d, alg.field)
    checks.append(Check.of("ext-center", "Z(T~) = T t^n when Z(T) = 0", ztil == ttn,
                           center_dim=ztil.dim))
    return checks


def embedding_checks(alg: GradedAlgebra) -> list[Check]:
    """phi lands in Der(T~), is injective, and ignores the choice of D'."""
    require_valid(alg)
    ext = extend(alg)
    car = ext.carrier
    inside = True
    dims = {}
    indep = True
    t2 = derived_subalgebra(alg)
    for th in realizable_degrees(alg):
        sp = operator_space(alg, "qder", th)
        img = phi_image(alg, th)
        der = projected(car, "der", th)
        inside = inside and subspace_contains(der, img)
        ll = projected(alg, "qder", th)
        dims[str(list(th))] = {"phi_qder": img.dim, "qder_ll": ll.dim}
        # another D' for the same D: add a map of degree th vanishing on [T..T]
        kill = _maps_vanishing_on(alg, t2, th)
        for pr in sp.tuples():
            base = _phi_matrix(alg, pr[0].matrix, pr[1].matrix)
            for K in kill:
                alt = pr[1].matrix + K
                if defect(alg, "qder", (pr[0].matrix, alt), th):
                    indep = False
                elif _phi_matrix(alg, pr[0].matrix, alt) != base:
                    indep = False
    same_dim = all(v["phi_qder"] == v["qder_ll"] for v in dims.values())
    return [
        Check.of("ext-phi-into-der", "phi(QDer(T)) is contained in Der(T~)", inside, dims=dims),
        Check.of("ext-phi-injective", "dim phi(QDer(T)) = dim QDer(T)", same_dim, dims=dims),
        Check.of("ext-phi-choice-free", "phi(D) does not depend on the choice of D'", indep),
    ]


def _maps_vanishing_on(alg: GradedAlgebra, sub: Subspace, theta) -> list[Matrix]:
    """Basis of the homogeneous maps of degree ``theta`` that kill ``sub``."""
    g = alg.group
    d = alg.dim
    z = alg.field.zero
    free = [(j, i) for j in range(d) for i in range(d)
            if alg.degrees[j] == g.add(alg.degrees[i], theta)]
    rows = []
    for v in sub.basis:
        for j in range(d):
            rows.append([v[i] if jj == j else z for (jj, i) in free])
    ker = nullspace_rows(rows, len(free), alg.field)
    out = []
    for w in ker.basis:
        ent = [z] * (d * d)
        for (j, i), x in zip(free, w):
            ent[j * d + i] = x
        out.append(Matrix(d, d, tuple(ent), alg.field))
    return out


def identity_preservation(alg: GradedAlgebra) -> Check:
    from .identities import builtin_identities, check_identity
    car = extend(alg).carrier
    kept, lost = [], []
    for name, ids in builtin_identities(alg.arity).items():
        if all(check_identity(alg, i) for i in ids):
            (kept if all(check_identity(car, i) for i in ids) else lost).append(name)
    return Check.of("ext-identities", "T~ satisfies every identity T satisfies",
                    not lost, preserved=kept, lost=lost)


__all__ = [
    "ExtendedAlgebra", "ExtensionError", "extend", "complement_U", "phi", "phi_image",
    "decomposition_check", "embedding_checks", "identity_preservation",
]
