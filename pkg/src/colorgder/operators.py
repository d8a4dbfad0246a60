"""Derivation-like operator spaces of a color n-ary algebra.

Every class is the kernel of a linear system in the entries of one or more
homogeneous matrices of a fixed degree ``theta``.  A map of degree ``theta``
sends ``e_i`` into the span of the ``e_j`` with ``deg e_j = deg e_i + theta``,
so only those entries are unknowns.

Flattened coordinates: a tuple of ``r`` maps is the vector of length
``r * d * d`` listing each matrix row-major; the ``(j, i)`` entry of a matrix
is the ``e_j`` coefficient of the image of ``e_i``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraError, GradedAlgebra, center, commutativity_sign, require_valid
from .grading import Bicharacter
from .linalg import Matrix, Subspace, image, nullspace_rows, subspace_contains, subspace_sum


class OperatorError(ValueError):
    pass


class PreconditionError(OperatorError):
    pass


CLASSES = ("der", "gder", "qder", "centroid", "qcentroid", "zder", "end")
_ALIASES = {"c": "centroid", "qc": "qcentroid", "derivation": "der"}


def canonical_class(cls: str) -> str:
    cls = _ALIASES.get(cls.lower(), cls.lower())
    if cls not in CLASSES:
        raise OperatorError(f"unknown operator class {cls!r}; expected one of {CLASSES}")
    return cls


def members(cls: str, n: int) -> int:
    return {"gder": n + 1, "qder": 2}.get(cls, 1)


@dataclass(frozen=True)
class HomMap:
    degree: tuple
    matrix: Matrix

    @classmethod
    def from_vector(cls, vec, d: int, degree: tuple, field) -> "HomMap":
        return cls(degree, Matrix(d, d, tuple(vec), field))

    def __call__(self, v):
        return self.matrix.apply(v)

    @property
    def vector(self) -> tuple:
        return self.matrix.entries

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


@dataclass(frozen=True)
class OperatorSpace:
    cls: str
    degree: tuple
    d: int
    members: int
    basis: Subspace

    @property
    def dim(self) -> int:
        return self.basis.dim

    def tuples(self) -> list[tuple[HomMap, ...]]:
        dd = self.d * self.d
        f = self.basis.field
        return [tuple(HomMap.from_vector(v[m * dd:(m + 1) * dd], self.d, self.degree, f)
                      for m in range(self.members))
                for v in self.basis.basis]


def realizable_degrees(alg: GradedAlgebra) -> list[tuple]:
    """Degrees ``deg e_j - deg e_i``; homogeneous maps of other degrees vanish."""
    g = alg.group
    degs = {g.sub(a, b) for a in alg.degrees for b in alg.degrees}
    if not degs:
        degs = {g.zero}
    return sorted(degs)


def _allowed(alg: GradedAlgebra, theta: tuple) -> list[tuple[int, int]]:
    g = alg.group
    return [(j, i) for j in range(alg.dim) for i in range(alg.dim)
            if alg.degrees[j] == g.add(alg.degrees[i], theta)]


def _system(alg: GradedAlgebra, cls: str, theta: tuple):
    d, n = alg.dim, alg.arity
    F = alg.field
    one = F.one
    r = members(cls, n)
    allowed = _allowed(alg, theta)
    var = {}
    for m in range(r):
        for (j, i) in allowed:
            var[(m, j, i)] = len(var)
    into = {i: [] for i in range(d)}   # k with M[k][i] free
    outof = {j: [] for j in range(d)}  # k with M[j][k] free
    for (j, i) in allowed:
        into[i].append(j)
        outof[j].append(i)
    rows: list[dict] = []
    if cls == "end":
        return var, rows, r

    def inner(row, m, t, s, j, coef):
        # coef * sum_k M_m[k][t_s] c(t with k at slot s)^j
        for k in into[t[s]]:
            c = alg.c(t[:s] + (k,) + t[s + 1:], j)
            if c:
                key = var[(m, k, t[s])]
                row[key] = row.get(key, 0) + coef * c

    def outer(row, m, t, j, coef):
        # coef * sum_k c(t)^k M_m[j][k]
        vec = alg.structure.get(t)
        if vec is None:
            return
        for k in outof[j]:
            if vec[k]:
                key = var[(m, j, k)]
                row[key] = row.get(key, 0) + coef * vec[k]

    for t in itertools.product(range(d), repeat=n):
        signs = []
        acc = alg.group.zero
        for s in range(n):
            signs.append(alg.eps(theta, acc))
            acc = alg.group.add(acc, alg.degrees[t[s]])
        for j in range(d):
            if cls in ("der", "gder", "qder"):
                row: dict = {}
                for s in range(n):
                    inner(row, s if cls == "gder" else 0, t, s, j, signs[s])
                outer(row, {"der": 0, "gder": n, "qder": 1}[cls], t, j, -one)
                rows.append(row)
            elif cls == "centroid":
                for s in range(n):
                    row = {}
                    inner(row, 0, t, s, j, signs[s])
                    outer(row, 0, t, j, -one)
                    rows.append(row)
            elif cls == "qcentroid":
                for s in range(1, n):
                    row = {}
                    inner(row, 0, t, 0, j, one)
                    inner(row, 0, t, s, j, -signs[s])
                    rows.append(row)
            elif cls == "zder":
                for s in range(n):
                    row = {}
                    inner(row, 0, t, s, j, one)
                    rows.append(row)
                row = {}
                outer(row, 0, t, j, one)
                rows.append(row)
    return var, rows, r


@lru_cache(maxsize=4096)
def _solve(alg: GradedAlgebra, cls: str, theta: tuple) -> OperatorSpace:
    d = alg.dim
    F = alg.field
    var, rows, r = _system(alg, cls, theta)
    nv = len(var)
    z = F.zero
    dense = []
    for row in rows:
        if row:
            v = [z] * nv
            for k, x in row.items():
                v[k] = x
            dense.append(v)
    ker = nullspace_rows(dense, nv, F)
    dd = d * d
    full = []
    pos = [m * dd + j * d + i for (m, j, i) in var]
    for v in ker.basis:
        w = [z] * (r * dd)
        for p, x in zip(pos, v):
            w[p] = x
        full.append(w)
    return OperatorSpace(cls, theta, d, r, Subspace.span(full, r * dd, F))


def operator_space(alg: GradedAlgebra, cls: str, theta=None) -> OperatorSpace:
    """Solution space of one operator class at one degree (default: degree zero)."""
    cls = canonical_class(cls)
    require_valid(alg)
    theta = alg.group.zero if theta is None else alg.group.element(theta)
    return _solve(alg, cls, theta)


def operator_spaces(alg: GradedAlgebra, cls: str) -> dict[tuple, OperatorSpace]:
    return {th: operator_space(alg, cls, th) for th in realizable_degrees(alg)}


_PROJECTIONS = {
    "end": ("end", 0), "der": ("der", 0), "centroid": ("centroid", 0),
    "qcentroid": ("qcentroid", 0), "zder": ("zder", 0),
    "qder": ("qder", 0), "qder_ll": ("qder", 0), "qder_ks": ("qder", 1),
    "gder": ("gder", 0), "c": ("centroid", 0), "qc": ("qcentroid", 0),
}


def project(space: OperatorSpace, coordinate) -> Subspace:
    """Span of one member of every basis tuple, as a subspace of End.

    For quasiderivation pairs ``(D, D')``: ``"LL"``/``"inner"`` is ``D`` and
    ``"KS"``/``"outer"`` is ``D'``.  For generalized derivations ``"first"``
    is ``D``; an integer selects any member.
    """
    if space.cls not in ("qder", "gder"):
        raise OperatorError(f"cannot project a {space.cls} space")
    if isinstance(coordinate, str):
        key = coordinate.lower()
        if key in ("ll", "inner", "first"):
            m = 0
        elif key in ("ks", "outer"):
            if space.cls != "qder":
                raise OperatorError("KS projection is defined for quasiderivation pairs")
            m = 1
        elif key == "last":
            m = space.members - 1
        else:
            raise OperatorError(f"unknown coordinate {coordinate!r}")
    else:
        m = int(coordinate)
    if not 0 <= m < space.members:
        raise OperatorError(f"coordinate {m} out of range")
    dd = space.d * space.d
    return Subspace.span([v[m * dd:(m + 1) * dd] for v in space.basis.basis], dd, space.basis.field)


def projected(alg: GradedAlgebra, name: str, theta=None) -> Subspace:
    """An operator class as a subspace of End at degree ``theta``."""
    try:
        cls, m = _PROJECTIONS[name.lower()]
    except KeyError:
        raise OperatorError(f"unknown space {name!r}") from None
    sp = operator_space(alg, cls, theta)
    if sp.members == 1:
        return sp.basis
    return project(sp, m)


def projected_all(alg: GradedAlgebra, name: str) -> dict[tuple, Subspace]:
    return {th: projected(alg, name, th) for th in realizable_degrees(alg)}


# -- products of homogeneous maps ----------------------------------------------

def color_bracket(D1: HomMap, D2: HomMap, eps: Bicharacter) -> HomMap:
    """``D1 D2 - eps(D1, D2) D2 D1``."""
    s = eps(D1.degree, D2.degree)
    M = D1.matrix @ D2.matrix - (D2.matrix @ D1.matrix).scale(s)
    return HomMap(eps.group.add(D1.degree, D2.degree), M)


def jordan_product(D1: HomMap, D2: HomMap, eps: Bicharacter) -> HomMap:
    """``D1 D2 + eps(D1, D2) D2 D1``."""
    s = eps(D1.degree, D2.degree)
    M = D1.matrix @ D2.matrix + (D2.matrix @ D1.matrix).scale(s)
    return HomMap(eps.group.add(D1.degree, D2.degree), M)


def compose(D1: HomMap, D2: HomMap, eps: Bicharacter) -> HomMap:
    return HomMap(eps.group.add(D1.degree, D2.degree), D1.matrix @ D2.matrix)


PRODUCTS = {"bracket": color_bracket, "jordan": jordan_product, "compose": compose}


def _maps(alg: GradedAlgebra, spaces) -> dict[tuple, list[HomMap]]:
    if isinstance(spaces, str):
        spaces = projected_all(alg, spaces)
    return {th: [HomMap.from_vector(v, alg.dim, th, alg.field) for v in sp.basis]
            for th, sp in spaces.items()}


def _spaces(alg: GradedAlgebra, spaces) -> dict[tuple, Subspace]:
    if isinstance(spaces, str):
        return projected_all(alg, spaces)
    return spaces


def products(alg: GradedAlgebra, kind: str, S1, S2):
    """Yield ``(D1, D2, D1 * D2)`` over all basis pairs of the two families."""
    op = PRODUCTS[kind]
    m1, m2 = _maps(alg, S1), _maps(alg, S2)
    for th1 in sorted(m1):
        for th2 in sorted(m2):
            for D1 in m1[th1]:
                for D2 in m2[th2]:
                    yield D1, D2, op(D1, D2, alg.eps)


def closure_failures(alg: GradedAlgebra, kind: str, S1, S2, target):
    """Yield ``(D1, D2, P)`` whose product ``P`` is not in ``target``."""
    tgt = _spaces(alg, target)
    for D1, D2, P in products(alg, kind, S1, S2):
        if P.is_zero():
            continue
        sp = tgt.get(P.degree)
        if sp is None or not sp.contains_vector(P.vector):
            yield D1, D2, P


def closure_check(alg: GradedAlgebra, kind: str, S1, S2, target) -> bool:
    """True iff every product of basis maps of ``S1`` and ``S2`` lies in ``target``.

    The families are degree-indexed dicts of End-subspaces or space names
    understood by :func:`projected`.
    """
    for _ in closure_failures(alg, kind, S1, S2, target):
        return False
    return True


def span_of_products(alg: GradedAlgebra, kind: str, S1, S2) -> dict[tuple, Subspace]:
    dd = alg.dim * alg.dim
    acc: dict[tuple, list] = {th: [] for th in realizable_degrees(alg)}
    for _, _, P in products(alg, kind, S1, S2):
        if not P.is_zero():
            acc.setdefault(P.degree, []).append(P.vector)
    return {th: Subspace.span(v, dd, alg.field) for th, v in acc.items()}


def add_spaces(a: dict, b: dict) -> dict:
    keys = set(a) | set(b)
    out = {}
    for k in keys:
        if k in a and k in b:
            out[k] = subspace_sum(a[k], b[k])
        else:
            out[k] = a.get(k) or b.get(k)
    return out


def contains_all(big: dict, small: dict) -> bool:
    for th, sp in small.items():
        if sp.is_zero():
            continue
        if th not in big or not subspace_contains(big[th], sp):
            return False
    return True


# -- reports -----------------------------------------------------------------

def qc_structure_report(alg: GradedAlgebra) -> dict:
    """Bracket/composition structure of the quasicentroid.

    Returns closure booleans, whether ``[C, QC]`` maps into the center, and
    the two equivalences ``Lie <=> associative`` (needs char != 2) and
    ``Lie <=> [QC, QC] = 0`` (needs char not dividing n and zero center),
    each as ``"pass"``, ``"fail"`` or ``"skip: <reason>"``.
    """
    require_valid(alg)
    qc = projected_all(alg, "qcentroid")
    c = projected_all(alg, "centroid")
    z = center(alg)
    bracket_closed = closure_check(alg, "bracket", qc, qc, qc)
    compose_closed = closure_check(alg, "compose", qc, qc, qc)
    jordan_closed = closure_check(alg, "jordan", qc, qc, qc)
    bracket_zero = all(P.is_zero() for _, _, P in products(alg, "bracket", qc, qc))
    into_center = True
    cqc_zero = True
    for _, _, P in products(alg, "bracket", c, qc):
        if not P.is_zero():
            cqc_zero = False
            if not all(z.contains_vector(P.matrix.col(i)) for i in range(alg.dim)):
                into_center = False
    char = alg.field.characteristic
    n = alg.arity
    if char == 2:
        lie_assoc = "skip: characteristic 2"
    else:
        lie_assoc = "pass" if bracket_closed == compose_closed else "fail"
    if char and n % char == 0:
        lie_abelian = f"skip: characteristic {char} divides n={n}"
    elif not z.is_zero():
        lie_abelian = f"skip: center has dimension {z.dim}"
    else:
        lie_abelian = "pass" if bracket_closed == bracket_zero else "fail"
    if z.is_zero():
        cqc = "pass" if cqc_zero else "fail"
    else:
        cqc = f"skip: center has dimension {z.dim}"
    return {
        "qc_dim": sum(s.dim for s in qc.values()),
        "bracket_closed": bracket_closed,
        "compose_closed": compose_closed,
        "jordan_closed": jordan_closed,
        "bracket_zero": bracket_zero,
        "center_dim": z.dim,
        "c_qc_into_center": into_center,
        "c_qc_zero": cqc,
        "lie_iff_associative": lie_assoc,
        "lie_iff_abelian": lie_abelian,
    }


def gder_decomposition_check(alg: GradedAlgebra) -> bool:
    """``GDer = QDer + QC`` degree-wise; requires (anti)commutativity."""
    require_valid(alg)
    if commutativity_sign(alg) is None:
        raise PreconditionError("algebra is neither color commutative nor anticommutative")
    for th in realizable_degrees(alg):
        g = projected(alg, "gder", th)
        s = subspace_sum(projected(alg, "qder", th), projected(alg, "qcentroid", th))
        if g != s:
            return False
    return True


def inclusion_chain(alg: GradedAlgebra) -> dict[tuple, bool]:
    """Per degree: ZDer <= Der <= QDer(LL) <= GDer(first) <= End."""
    out = {}
    names = ("zder", "der", "qder", "gder", "end")
    for th in realizable_degrees(alg):
        sp = [projected(alg, nm, th) for nm in names]
        out[th] = all(subspace_contains(b, a) for a, b in zip(sp, sp[1:]))
    return out


def materialize(alg: GradedAlgebra, spaces, kind: str, name: str = "") -> GradedAlgebra:
    """The binary algebra carried by a product-closed family of maps.

    The basis is the concatenation of the RREF bases of the degree blocks
    (in sorted degree order); basis maps keep their degree.
    """
    spaces = _spaces(alg, spaces)
    op = PRODUCTS[kind]
    order = sorted(th for th, sp in spaces.items() if sp.dim)
    basis: list[HomMap] = []
    offset = {}
    for th in order:
        offset[th] = len(basis)
        basis.extend(HomMap.from_vector(v, alg.dim, th, alg.field) for v in spaces[th].basis)
    N = len(basis)
    z = alg.field.zero
    struct = {}
    for a, Da in enumerate(basis):
        for b, Db in enumerate(basis):
            P = op(Da, Db, alg.eps)
            if P.is_zero():
                continue
            sp = spaces.get(P.degree)
            coords = sp.coordinates(P.vector) if sp is not None else None
            if coords is None:
                raise OperatorError(f"family is not closed under {kind}: product of basis "
                                    f"maps {a} and {b} leaves it")
            vec = [z] * N
            for k, x in enumerate(coords):
                vec[offset[P.degree] + k] = x
            struct[(a, b)] = vec
    return GradedAlgebra(N, 2, struct, alg.group, [D.degree for D in basis], alg.eps,
                         alg.field, name or f"{kind}-algebra")


# -- direct evaluation ---------------------------------------------------------

def defect(alg: GradedAlgebra, cls: str, maps, theta=None) -> list:
    """Evaluate the defining equations of ``cls`` on explicit maps.

    Works from the product and matrix application alone (no assembled
    system).  Returns the list of nonzero residual vectors; empty means the
    maps satisfy the equations.
    """
    cls = canonical_class(cls)
    theta = alg.group.zero if theta is None else alg.group.element(theta)
    mats = [m.matrix if isinstance(m, HomMap) else m for m in maps]
    d, n = alg.dim, alg.arity
    E = [alg.basis_vector(i) for i in range(d)]
    bad = []
    for t in itertools.product(range(d), repeat=n):
        xs = [E[i] for i in t]
        prod = alg.product(t)
        signs = []
        acc = alg.group.zero
        for s in range(n):
            signs.append(alg.eps(theta, acc))
            acc = alg.group.add(acc, alg.degrees[t[s]])

        def slot(s, M):
            args = list(xs)
            args[s] = M.apply(xs[s])
            return alg.bracket(*args)

        def comb(terms):
            out = [alg.field.zero] * d
            for coef, v in terms:
                for j, x in enumerate(v):
                    if x:
                        out[j] = out[j] + coef * x
            return out

        res = []
        one = alg.field.one
        if cls == "der":
            res.append(comb([(signs[s], slot(s, mats[0])) for s in range(n)]
                            + [(-one, mats[0].apply(prod))]))
        elif cls == "gder":
            res.append(comb([(signs[s], slot(s, mats[s])) for s in range(n)]
                            + [(-one, mats[n].apply(prod))]))
        elif cls == "qder":
            res.append(comb([(signs[s], slot(s, mats[0])) for s in range(n)]
                            + [(-one, mats[1].apply(prod))]))
        elif cls == "centroid":
            for s in range(n):
                res.append(comb([(signs[s], slot(s, mats[0])), (-one, mats[0].apply(prod))]))
        elif cls == "qcentroid":
            for s in range(1, n):
                res.append(comb([(one, slot(0, mats[0])), (-signs[s], slot(s, mats[0]))]))
        elif cls == "zder":
            for s in range(n):
                res.append(list(slot(s, mats[0])))
            res.append(list(mats[0].apply(prod)))
        for r in res:
            if any(r):
                bad.append((t, r))
    return bad


def homogeneity_ok(alg: GradedAlgebra, M: Matrix, theta) -> bool:
    theta = alg.group.element(theta)
    g = alg.group
    for j in range(alg.dim):
        for i in range(alg.dim):
            if M[j, i] and alg.degrees[j] != g.add(alg.degrees[i], theta):
                return False
    return True


def maps_into(M: Matrix, target: Subspace) -> bool:
    return subspace_contains(target, image(M))


__all__ = [
    "AlgebraError", "OperatorError", "PreconditionError", "HomMap", "OperatorSpace",
    "CLASSES", "operator_space", "operator_spaces", "project", "projected", "projected_all",
    "realizable_degrees", "color_bracket", "jordan_product", "compose", "closure_check",
    "closure_failures", "span_of_products", "qc_structure_report", "gder_decomposition_check",
    "inclusion_chain", "materialize", "defect", "homogeneity_ok", "add_spaces",
    "contains_all", "maps_into",
]
