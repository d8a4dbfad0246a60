"""Induced End(L)-actions on exterior, symmetric and tensor powers.

For ``f`` in End(L) the induced map ``f*`` applies ``f`` to one factor at a
time and sums over the factors.  Matrix units follow the convention
``e_ij(e_k) = delta_ik e_j``: ``e_ij`` sends ``e_i`` to ``e_j``.

The classification helpers work on trivially graded algebras over a field of
characteristic zero; anything else is rejected.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .algebra import (GradedAlgebra, check_gamma_commutative, commutativity_sign,
                      derived_subalgebra, make_LB)
from .field import QQ, Field
from .linalg import Matrix, Subspace, nullspace, rank, subspace_sum
from .operators import HomMap, defect, projected
from .report import Check

KINDS = ("exterior", "symmetric", "tensor")


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class InducedModule:
    kind: str
    d: int
    n: int
    field: Field = QQ

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ModuleError(f"kind must be one of {KINDS}")
        if self.d < 0 or self.n < 1:
            raise ModuleError("need d >= 0 and n >= 1")

    @property
    def basis(self) -> list[tuple]:
        """Exterior: sorted n-subsets; symmetric: exponent vectors; tensor: n-tuples."""
        return _basis(self.kind, self.d, self.n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self) -> dict:
        return {b: k for k, b in enumerate(self.basis)}


_BASIS_CACHE: dict = {}


def _basis(kind, d, n):
    key = (kind, d, n)
    b = _BASIS_CACHE.get(key)
    if b is None:
        if kind == "exterior":
            b = list(itertools.combinations(range(d), n))
        elif kind == "symmetric":
            b = []
            for c in itertools.combinations_with_replacement(range(d), n):
                e = [0] * d
                for i in c:
                    e[i] += 1
                b.append(tuple(e))
            b.sort(reverse=True)
        else:
            b = list(itertools.product(range(d), repeat=n))
        _BASIS_CACHE[key] = b
    return b


def expected_dim(kind: str, d: int, n: int) -> int:
    return {"exterior": comb(d, n), "symmetric": comb(d + n - 1, n), "tensor": d ** n}[kind]


def _word(M: InducedModule, b) -> list[int]:
    """Factor indices of a basis element, in order."""
    if M.kind == "symmetric":
        return [i for i, k in enumerate(b) for _ in range(k)]
    return list(b)


def _normalize(M: InducedModule, word: list[int]):
    """(basis element, sign) for a word of factor indices, or None if it vanishes."""
    if M.kind == "tensor":
        return tuple(word), 1
    if M.kind == "symmetric":
        e = [0] * M.d
        for i in word:
            e[i] += 1
        return tuple(e), 1
    if len(set(word)) < len(word):
        return None
    inv = sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])
    return tuple(sorted(word)), -1 if inv % 2 else 1


def induced_action(f, M: InducedModule) -> Matrix:
    """Matrix of ``f*`` on ``M`` (column ``k`` = image of the k-th basis element)."""
    F = f.matrix if isinstance(f, HomMap) else f
    if (F.rows, F.cols) != (M.d, M.d):
        raise ModuleError(f"map is {F.rows}x{F.cols}, module is over a {M.d}-dim space")
    idx = M.index()
    N = len(idx)
    z = M.field.zero
    cols = []
    for b in M.basis:
        col = [z] * N
        w = _word(M, b)
        for s, i in enumerate(w):
            for k in range(M.d):
                a = F[k, i]
                if not a:
                    continue
                w2 = w[:s] + [k] + w[s + 1:]
                r = _normalize(M, w2)
                if r is None:
                    continue
                key, sg = r
                col[idx[key]] = col[idx[key]] + (a if sg > 0 else -a)
        cols.append(col)
    return Matrix(N, N, tuple(cols[c][r] for r in range(N) for c in range(N)), M.field)


def matrix_unit(d: int, i: int, j: int, field: Field = QQ) -> Matrix:
    """``e_ij``: sends ``e_i`` to ``e_j``."""
    ent = [field.zero] * (d * d)
    ent[j * d + i] = field.one
    return Matrix(d, d, tuple(ent), field)


def _generators(M: InducedModule) -> list[Matrix]:
    return [induced_action(matrix_unit(M.d, p, q, M.field), M)
            for p in range(M.d) for q in range(M.d)]


def is_submodule(S: Subspace, M: InducedModule, gens: list[Matrix] | None = None) -> bool:
    """``e_pq*(S) <= S`` for all matrix units ``e_pq``."""
    if S.ambient_dim != M.dim:
        raise ModuleError("subspace does not live in the module")
    gens = gens if gens is not None else _generators(M)
    for G in gens:
        for v in S.basis:
            if not S.contains_vector(G.apply(v)):
                return False
    return True


def submodule_generated(v, M: InducedModule, gens: list[Matrix] | None = None) -> Subspace:
    """Smallest e_pq*-invariant subspace containing ``v``."""
    gens = gens if gens is not None else _generators(M)
    S = Subspace.span([v], M.dim, M.field)
    frontier = list(S.basis)
    while frontier:
        new = [G.apply(w) for G in gens for w in frontier]
        T = Subspace.span(list(S.basis) + new, M.dim, M.field)
        if T.dim == S.dim:
            break
        frontier = [w for w in T.basis if not S.contains_vector(w)]
        S = T
    return S


def probe_vectors(M: InducedModule) -> list[tuple]:
    """Basis vectors plus sums of 2 and 3 consecutive basis vectors."""
    N = M.dim
    z, o = M.field.zero, M.field.one
    out = []
    for k in range(1, 4):
        for s in range(N - k + 1):
            v = [z] * N
            for t in range(s, s + k):
                v[t] = o
            out.append(tuple(v))
    return out


def is_irreducible(M: InducedModule) -> bool:
    if M.dim == 0:
        return True
    gens = _generators(M)
    for v in probe_vectors(M):
        if submodule_generated(v, M, gens).dim != M.dim:
            return False
    return True


# -- algebras ---------------------------------------------------------------

def _require_ungraded_char0(alg: GradedAlgebra):
    if not alg.is_trivially_graded():
        raise ModuleError("module-action results need a trivially graded algebra")
    if alg.field.characteristic != 0:
        raise ModuleError("module-action results need characteristic zero")


def module_kind(alg: GradedAlgebra) -> str:
    _require_ungraded_char0(alg)
    s = commutativity_sign(alg)
    if s is None:
        raise ModuleError("algebra is neither commutative nor anticommutative")
    return "exterior" if s == -1 else "symmetric"


def mu_map(alg: GradedAlgebra, kind: str | None = None) -> tuple[Matrix, InducedModule]:
    """The product as a linear map from the exterior/symmetric power to L."""
    _require_ungraded_char0(alg)
    if kind is None:
        kind = module_kind(alg)
    gamma = {"exterior": -1, "symmetric": 1}.get(kind)
    if gamma is None or not check_gamma_commutative(alg, gamma):
        raise ModuleError(f"algebra symmetry does not match the {kind} power")
    M = InducedModule(kind, alg.dim, alg.arity, alg.field)
    cols = [alg.product(tuple(_word(M, b))) for b in M.basis]
    ent = tuple(cols[c][r] for r in range(alg.dim) for c in range(len(cols)))
    return Matrix(alg.dim, M.dim, ent, alg.field), M


def qder_ll_equals_end(alg: GradedAlgebra, cross_check: bool = True) -> bool:
    """Kernel criterion: ``QDer_LL = End`` iff ``ker mu`` is a submodule."""
    mu, M = mu_map(alg)
    res = is_submodule(nullspace(mu), M)
    if cross_check:
        direct = projected(alg, "qder").is_full()
        if direct != res:
            raise AssertionError(f"kernel criterion ({res}) disagrees with the direct "
                                 f"computation ({direct}) for {alg!r}")
    return res


@dataclass(frozen=True)
class Verdict:
    qder_ll_end: bool
    qder_ks_end: bool
    dim: int
    derived_dim: int
    mu_kernel_dim: int
    kind: str
    qder_ll_dim: int
    qder_ks_dim: int
    consistency: tuple  # of (id, statement, bool)

    def to_json(self) -> dict:
        return {
            "qder_ll_end": self.qder_ll_end, "qder_ks_end": self.qder_ks_end,
            "invariants": {"dim": self.dim, "dim_L2": self.derived_dim,
                           "mu_kernel_dim": self.mu_kernel_dim},
            "kind": self.kind, "dim_qder_ll": self.qder_ll_dim, "dim_qder_ks": self.qder_ks_dim,
            "consistency": {k: ok for k, _, ok in self.consistency},
        }


def classify_qder_end(alg: GradedAlgebra) -> Verdict:
    """Invariants and the QDer = End dichotomies for an (anti)commutative algebra."""
    mu, M = mu_map(alg)
    ll = projected(alg, "qder")
    ks = projected(alg, "qder_ks")
    ll_end, ks_end = ll.is_full(), ks.is_full()
    d = alg.dim
    n = alg.arity
    l2 = derived_subalgebra(alg).dim
    kerdim = M.dim - rank(mu)
    mu_zero = mu.is_zero()
    cons = [("kernel-criterion", "kernel criterion agrees with the direct LL computation",
             qder_ll_equals_end(alg, cross_check=False) == ll_end)]
    if ll_end and not mu_zero:
        if M.kind == "exterior":
            cons.append(("ll-dim-bound", "LL = End and mu != 0 imply dim <= n+1", d <= n + 1))
        else:
            cons.append(("ll-dim-one", "LL = End and mu != 0 imply dim = 1", d == 1))
        cons.append(("ll-injective-mu", "LL = End and mu != 0 imply ker mu = 0", kerdim == 0))
    if ks_end:
        cons.append(("ks-derived", "KS = End implies L^2 is 0 or L", l2 in (0, d)))
        if not mu_zero:
            cons.append(("ks-implies-ll", "KS = End and mu != 0 imply LL = End", ll_end))
    if l2 == d:
        cons.append(("ks-le-ll", "L = L^2 implies dim KS <= dim LL", ks.dim <= ll.dim))
    return Verdict(ll_end, ks_end, d, l2, kerdim, M.kind, ll.dim, ks.dim, tuple(cons))


def dual_basis_unit(B: Matrix, i: int, j: int) -> Matrix:
    """Matrix (basis ``e``) of the unit sending ``e^i`` to ``e^j``, where ``e^k`` is column k of B."""
    Binv = inverse(B)
    U = matrix_unit(B.rows, i, j, B.field)
    return B @ U @ Binv


def inverse(B: Matrix) -> Matrix:
    n = B.rows
    if B.cols != n:
        raise ModuleError("matrix is not square")
    from .linalg import _rref_rows
    z, o = B.field.zero, B.field.one
    rows = [list(B.row(i)) + [o if k == i else z for k in range(n)] for i in range(n)]
    red, piv = _rref_rows(rows, 2 * n, B.field)
    if piv[:n] != list(range(n)) or len(piv) < n or piv[n - 1] != n - 1:
        raise ModuleError("matrix is singular")
    return Matrix.from_rows([r[n:] for r in red], B.field)


def eij_partner(n: int, i: int, j: int, field: Field = QQ) -> Matrix:
    """Inner map paired with ``e^{ij}``: ``-e_ji``, plus ``id/n`` on the diagonal.

    Off the diagonal ``-e_ji`` works as stated.  For ``i == j`` the bare
    ``-e_ii`` fails on every basis product, and the correction by ``id/n``
    is forced (see :func:`eij_pair_ok`).
    """
    P = matrix_unit(n + 1, j, i, field).scale(-1)
    if i == j:
        P = P + Matrix.identity(n + 1, field).scale(field(1) / field(n))
    return P


def eij_pair_ok(alg: GradedAlgebra, outer: Matrix, inner: Matrix) -> bool:
    """``outer([a_1..a_n]) == sum_i [a_1 .. inner(a_i) .. a_n]`` on all basis tuples."""
    return not defect(alg, "qder", (inner, outer))


def verify_eij_quasiderivation(n: int, B, field: Field = QQ, literal: bool = False) -> dict:
    """Check every dual-basis unit ``e^{ij}`` of ``L_B`` against its inner partner.

    With ``literal=True`` the partner is ``-e_ji`` for all pairs, including
    the diagonal.  Returns ``{(i, j): bool}`` with 0-based indices.
    """
    if not isinstance(B, Matrix):
        B = Matrix.from_rows(B, field)
    if rank(B) != n + 1:
        raise ModuleError("B is singular")
    alg = make_LB(n, B, field)
    out = {}
    for i in range(n + 1):
        for j in range(n + 1):
            outer = dual_basis_unit(B, i, j)
            inner = (matrix_unit(n + 1, j, i, field).scale(-1) if literal
                     else eij_partner(n, i, j, field))
            out[(i, j)] = eij_pair_ok(alg, outer, inner)
    return out


# -- tensor cube submodules ------------------------------------------------------

def _perm_sign(p) -> int:
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inv % 2 else 1


def tensor_cube_spans(d: int, field: Field = QQ) -> dict[str, Subspace]:
    """The five spans in ``T (x) T (x) T`` built from all basis substitutions."""
    M = InducedModule("tensor", d, 3, field)
    idx = M.index()
    N = M.dim
    z = field.zero

    def vec(terms):
        v = [z] * N
        for c, t in terms:
            v[idx[t]] = v[idx[t]] + field(c)
        return tuple(v)

    gens: dict[str, list] = {"plus": [], "minus": [], "swap23": [], "sym": [], "alt": []}
    for x, y, w in itertools.product(range(d), repeat=3):
        gens["plus"].append(vec([(1, (x, y, w)), (1, (y, x, w))]))
        gens["minus"].append(vec([(1, (x, y, w)), (-1, (y, x, w))]))
        gens["swap23"].append(vec([(1, (x, y, w)), (1, (x, w, y))]))
        xs = (x, y, w)
        perms = list(itertools.permutations(range(3)))
        gens["sym"].append(vec([(1, tuple(xs[p] for p in pm)) for pm in perms]))
        gens["alt"].append(vec([(_perm_sign(pm), tuple(xs[p] for p in pm)) for pm in perms]))
    return {k: Subspace.span(v, N, field) for k, v in gens.items()}


def appendix_submodules(d: int, field: Field = QQ) -> list[Check]:
    if d < 2:
        raise ModuleError("need d >= 2")
    M = InducedModule("tensor", d, 3, field)
    gens = _generators(M)
    sp = tensor_cube_spans(d, field)
    dims = {k: v.dim for k, v in sp.items()}
    checks = []
    for k in ("plus", "minus", "swap23", "sym", "alt"):
        checks.append(Check.of(f"tensor-{k}-submodule", f"{k} span is an End(T)-submodule",
                               is_submodule(sp[k], M, gens), dim=dims[k]))
    checks.append(Check.of(
        "tensor-swap23-new", "span(x@y@z + x@z@y) differs from both (+) and (-) spans",
        sp["swap23"] != sp["plus"] and sp["swap23"] != sp["minus"], dims=dims))
    sym_in = subspace_sum(sp["plus"], sp["sym"]) == sp["plus"]
    alt_in = subspace_sum(sp["minus"], sp["alt"]) == sp["minus"]
    checks.append(Check.of("tensor-sym-proper", "symmetrized span is a proper subspace of (+)",
                           sym_in and sp["sym"].dim < sp["plus"].dim, dims=dims))
    checks.append(Check.of("tensor-alt-proper", "alternating span is a proper subspace of (-)",
                           alt_in and sp["alt"].dim < sp["minus"].dim, dims=dims))
    return checks


__all__ = [
    "InducedModule", "ModuleError", "KINDS", "expected_dim", "induced_action", "matrix_unit",
    "is_submodule", "submodule_generated", "is_irreducible", "probe_vectors", "mu_map",
    "module_kind", "qder_ll_equals_end", "Verdict", "classify_qder_end", "dual_basis_unit",
    "inverse", "eij_partner", "eij_pair_ok", "verify_eij_quasiderivation",
    "tensor_cube_spans", "appendix_submodules",
]
