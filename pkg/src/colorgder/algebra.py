"""Color n-ary algebras given by structure constants, and the standard catalog."""
from __future__ import annotations

import itertools
import random
from typing import Iterable, Mapping, Sequence

from .field import QQ, Field
from .grading import TRIVIAL_GROUP, AbelianGroup, Bicharacter
from .linalg import Matrix, Subspace, nullspace_rows, rank


class AlgebraError(ValueError):
    pass


CLOSURES = ("none", "antisymmetrize", "symmetrize")


class GradedAlgebra:
    """An n-ary algebra on basis ``e_0 .. e_{dim-1}``.

    ``structure`` maps an index tuple ``(i_1, ..., i_n)`` to the coefficient
    vector of ``[e_{i_1}, ..., e_{i_n}]``; missing tuples are zero products.
    Indices are 0-based internally.
    """

    def __init__(self, dim: int, arity: int, structure: Mapping[tuple, Sequence],
                 group: AbelianGroup = TRIVIAL_GROUP, degrees: Sequence | None = None,
                 eps: Bicharacter | None = None, field: Field = QQ, name: str = ""):
        if dim < 0 or arity < 1:
            raise AlgebraError("need dim >= 0 and arity >= 1")
        self.dim = dim
        self.arity = arity
        self.group = group
        self.field = field
        if degrees is None:
            degrees = [group.zero] * dim
        if len(degrees) != dim:
            raise AlgebraError(f"{len(degrees)} degrees given for dimension {dim}")
        self.degrees = tuple(group.element(g) for g in degrees)
        self.eps = eps if eps is not None else Bicharacter(group, None, field)
        if self.eps.group != group:
            raise AlgebraError("bicharacter is defined on a different group")
        z = field.zero
        st = {}
        for t, vec in structure.items():
            t = tuple(int(i) for i in t)
            if len(t) != arity or any(not 0 <= i < dim for i in t):
                raise AlgebraError(f"bad product index tuple {t}")
            vec = tuple(field(x) for x in vec)
            if len(vec) != dim:
                raise AlgebraError(f"product {t} has {len(vec)} coordinates, expected {dim}")
            if any(vec):
                st[t] = vec
        self.structure = st
        self.name = name
        self._zero = (z,) * dim

    # -- basic access ------------------------------------------------------

    def product(self, t: tuple) -> tuple:
        return self.structure.get(t, self._zero)

    def c(self, t: tuple, j: int):
        v = self.structure.get(t)
        return v[j] if v is not None else self.field.zero

    def deg_sum(self, idx: Iterable[int]) -> tuple:
        return self.group.sum(self.degrees[i] for i in idx)

    def bracket(self, *vectors: Sequence) -> tuple:
        """Multilinear product of coordinate vectors."""
        if len(vectors) != self.arity:
            raise AlgebraError(f"expected {self.arity} arguments")
        out = list(self._zero)
        supports = [[(i, x) for i, x in enumerate(v) if x] for v in vectors]
        for combo in itertools.product(*supports):
            t = tuple(i for i, _ in combo)
            vec = self.structure.get(t)
            if vec is None:
                continue
            coef = self.field.one
            for _, x in combo:
                coef = coef * x
            for j, cj in enumerate(vec):
                if cj:
                    out[j] = out[j] + coef * cj
        return tuple(out)

    def sparse_product(self, t: tuple) -> dict:
        vec = self.structure.get(t)
        if vec is None:
            return {}
        return {j: x for j, x in enumerate(vec) if x}

    def is_trivially_graded(self) -> bool:
        return self.eps.is_trivial() and all(g == self.group.zero for g in self.degrees)

    def basis_vector(self, i: int) -> tuple:
        v = list(self._zero)
        v[i] = self.field.one
        return tuple(v)

    def relabel(self, name: str) -> "GradedAlgebra":
        return GradedAlgebra(self.dim, self.arity, self.structure, self.group, self.degrees,
                             self.eps, self.field, name)

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self.arity == other.arity
                and self.group == other.group and self.degrees == other.degrees
                and self.eps == other.eps and self.field == other.field
                and self.structure == other.structure)

    def __hash__(self):
        return hash((self.dim, self.arity, self.degrees, frozenset(self.structure.items())))

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return (f"<GradedAlgebra{nm} dim={self.dim} arity={self.arity} "
                f"nonzero_products={len(self.structure)} field={self.field!r}>")

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, dim: int, arity: int, products: Mapping[tuple, object],
              closure: str = "none", **kw) -> "GradedAlgebra":
        """Build from generator products.

        ``products`` maps index tuples to either a full coefficient vector or
        a sparse ``{j: c}`` dict.  With ``closure`` set to ``"antisymmetrize"``
        (``"symmetrize"``) every generator is propagated to all rearrangements
        of its arguments through ``[.., x, y, ..] = g eps(x, y) [.., y, x, ..]``
        with ``g = -1`` (``+1``).  Conflicting values raise :class:`AlgebraError`.
        """
        if closure not in CLOSURES:
            raise AlgebraError(f"closure must be one of {CLOSURES}")
        field = kw.get("field", QQ)
        group = kw.get("group", TRIVIAL_GROUP)
        degrees = kw.get("degrees")
        eps = kw.get("eps") or Bicharacter(group, None, field)
        degs = tuple(group.element(g) for g in degrees) if degrees is not None else (group.zero,) * dim
        if len(degs) != dim:
            raise AlgebraError(f"{len(degs)} degrees given for dimension {dim}")
        z = field.zero

        def as_vec(v):
            if isinstance(v, Mapping):
                out = [z] * dim
                for j, x in v.items():
                    j = int(j)
                    if not 0 <= j < dim:
                        raise AlgebraError(f"output index {j} out of range")
                    out[j] = out[j] + field(x)
                return tuple(out)
            v = tuple(field(x) for x in v)
            if len(v) != dim:
                raise AlgebraError(f"coefficient vector of length {len(v)}, expected {dim}")
            return v

        struct: dict[tuple, tuple] = {}
        if closure == "none":
            for t, v in products.items():
                struct[tuple(t)] = as_vec(v)
        else:
            gamma = field(-1 if closure == "antisymmetrize" else 1)
            for t, v in products.items():
                t = tuple(int(i) for i in t)
                if len(t) != arity or any(not 0 <= i < dim for i in t):
                    raise AlgebraError(f"bad product index tuple {t}")
                orbit = {t: as_vec(v)}
                queue = [t]
                while queue:
                    cur = queue.pop()
                    val = orbit[cur]
                    for i in range(arity - 1):
                        x, y = cur[i], cur[i + 1]
                        nxt = cur[:i] + (y, x) + cur[i + 2:]
                        f = gamma * eps(degs[y], degs[x])
                        nval = tuple(f * a for a in val)
                        old = orbit.get(nxt)
                        if old is None:
                            orbit[nxt] = nval
                            queue.append(nxt)
                        elif old != nval:
                            raise AlgebraError(
                                f"closure of product {t} is inconsistent at {nxt}: "
                                f"the {closure} rule forces this product to vanish")
                for s, val in orbit.items():
                    old = struct.get(s)
                    if old is not None and old != val:
                        raise AlgebraError(f"generator products disagree at {s}")
                    struct[s] = val
        return cls(dim, arity, struct, group, degs, eps, field, kw.get("name", ""))


# -- validation --------------------------------------------------------------

def validation_errors(alg: GradedAlgebra) -> list[str]:
    errs = []
    for msg in alg.eps.violations():
        errs.append(f"bicharacter: {msg}")
    for t in sorted(alg.structure):
        target = alg.deg_sum(t)
        for j, x in enumerate(alg.structure[t]):
            if x and alg.degrees[j] != target:
                errs.append(f"product {list(t)} has a component on e{j} of degree "
                            f"{alg.degrees[j]}, expected {target}")
                break
    return errs


def validate(alg: GradedAlgebra) -> bool:
    """Grading compatibility of every product and the bicharacter axioms."""
    return not validation_errors(alg)


def require_valid(alg: GradedAlgebra) -> None:
    errs = validation_errors(alg)
    if errs:
        raise AlgebraError(errs[0])


# -- structural queries --------------------------------------------------------

def check_gamma_commutative(alg: GradedAlgebra, gamma: int) -> bool:
    """``[.., x_i, x_{i+1}, ..] == gamma eps(x_i, x_{i+1}) [.., x_{i+1}, x_i, ..]``."""
    if gamma not in (1, -1):
        raise ValueError("gamma must be +1 or -1")
    g = alg.field(gamma)
    n = alg.arity
    for t in itertools.product(range(alg.dim), repeat=n):
        lhs = alg.product(t)
        for i in range(n - 1):
            x, y = t[i], t[i + 1]
            s = t[:i] + (y, x) + t[i + 2:]
            f = g * alg.eps(alg.degrees[x], alg.degrees[y])
            rhs = alg.product(s)
            if any(a != f * b for a, b in zip(lhs, rhs)):
                return False
    return True


def commutativity_sign(alg: GradedAlgebra) -> int | None:
    """-1 if anticommutative, +1 if commutative (anticommutative preferred), else None."""
    if check_gamma_commutative(alg, -1):
        return -1
    if check_gamma_commutative(alg, 1):
        return 1
    return None


def derived_subalgebra(alg: GradedAlgebra) -> Subspace:
    """The span of all products ``[T, ..., T]``."""
    return Subspace.span(alg.structure.values(), alg.dim, alg.field)


def center(alg: GradedAlgebra) -> Subspace:
    """All-slot annihilator: ``z`` with ``[.., z, ..] = 0`` in every slot."""
    d, n = alg.dim, alg.arity
    z = alg.field.zero
    rows = []
    for s in range(n):
        for rest in itertools.product(range(d), repeat=n - 1):
            for j in range(d):
                row = [z] * d
                hit = False
                for k in range(d):
                    t = rest[:s] + (k,) + rest[s:]
                    c = alg.c(t, j)
                    if c:
                        row[k] = c
                        hit = True
                if hit:
                    rows.append(row)
    return nullspace_rows(rows, d, alg.field)


# -- catalog -----------------------------------------------------------------

def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def make_zero(dim: int, n: int, field: Field = QQ) -> GradedAlgebra:
    return GradedAlgebra(dim, n, {}, field=field, name=f"zero{dim}_{n}")


def make_A(n: int, field: Field = QQ) -> GradedAlgebra:
    """n-dimensional anticommutative algebra with ``[e_1, ..., e_n] = e_1``."""
    return GradedAlgebra.build(n, n, {tuple(range(n)): {0: 1}}, "antisymmetrize",
                               field=field, name=f"A{n}")


def make_LB(n: int, B, field: Field = QQ, name: str | None = None) -> GradedAlgebra:
    """(n+1)-dimensional anticommutative algebra given by the matrix ``B``.

    ``[e_1, .., ^e_i, .., e_{n+1}] = (-1)**(n+i+1) e^i`` with ``e^i`` the
    i-th column of ``B`` read in the basis ``e``.
    """
    if not isinstance(B, Matrix):
        B = Matrix.from_rows(B, field)
    if (B.rows, B.cols) != (n + 1, n + 1):
        raise AlgebraError(f"B must be {n + 1}x{n + 1}, got {B.rows}x{B.cols}")
    prods = {}
    for i in range(1, n + 2):
        t = tuple(k for k in range(n + 1) if k != i - 1)
        s = field(_sign(n + i + 1))
        col = B.col(i - 1)
        vec = tuple(s * field(x) for x in col)
        if any(vec):
            prods[t] = vec
    return GradedAlgebra.build(n + 1, n, prods, "antisymmetrize", field=field,
                               name=name if name is not None else f"L_B{n + 1}")


def make_D(n: int, field: Field = QQ) -> GradedAlgebra:
    """The perfect (n+1)-dimensional n-Lie algebra."""
    prods = {}
    for i in range(1, n + 2):
        t = tuple(k for k in range(n + 1) if k != i - 1)
        prods[t] = {i - 1: _sign(n + i + 1)}
    return GradedAlgebra.build(n + 1, n, prods, "antisymmetrize", field=field, name=f"D{n + 1}")


def make_Lalpha(n: int, alpha, field: Field = QQ) -> GradedAlgebra:
    """One-dimensional n-ary algebra with ``[v, ..., v] = alpha v``."""
    a = field(alpha)
    prods = {(0,) * n: (a,)} if a else {}
    return GradedAlgebra(1, n, prods, field=field, name=f"L_alpha={field.format(a)}")


def random_algebra(dim: int, n: int, rng: random.Random, closure: str = "none",
                   density: float = 0.3, coeffs: Sequence[int] = (-2, -1, 1, 2),
                   field: Field = QQ, name: str = "") -> GradedAlgebra:
    """Random trivially graded algebra with small integer structure constants."""
    prods = {}
    if closure == "antisymmetrize":
        pool = list(itertools.combinations(range(dim), n))
    elif closure == "symmetrize":
        pool = list(itertools.combinations_with_replacement(range(dim), n))
    else:
        pool = list(itertools.product(range(dim), repeat=n))
    for t in pool:
        if rng.random() < density:
            prods[t] = {j: rng.choice(coeffs) for j in range(dim) if rng.random() < 0.5}
    return GradedAlgebra.build(dim, n, prods, closure, field=field, name=name)


def random_matrix(size: int, rng: random.Random, lo: int = -3, hi: int = 3,
                  field: Field = QQ, rank_target: int | None = None) -> Matrix:
    """Random integer matrix; with ``rank_target`` the rank is exactly that value."""
    while True:
        if rank_target is None:
            m = Matrix.from_rows([[rng.randint(lo, hi) for _ in range(size)]
                                  for _ in range(size)], field)
            return m
        left = Matrix.from_rows([[rng.randint(lo, hi) for _ in range(rank_target)]
                                 for _ in range(size)], field)
        right = Matrix.from_rows([[rng.randint(lo, hi) for _ in range(size)]
                                  for _ in range(rank_target)], field)
        m = left @ right
        if rank(m) == rank_target:
            return m


def random_graded_algebra(dim: int, n: int, rng: random.Random, group: AbelianGroup,
                          eps: Bicharacter, closure: str = "none", density: float = 0.4,
                          coeffs: Sequence[int] = (-2, -1, 1, 2), name: str = "") -> GradedAlgebra:
    """Random color algebra: degrees drawn from small group elements, products homogeneous."""
    field = eps.field
    span = [list(range(o)) if o else [-1, 0, 1] for o in group.cyclic_orders]
    degs = [group.element(tuple(rng.choice(s) for s in span)) for _ in range(dim)]
    if closure == "antisymmetrize":
        pool = list(itertools.combinations(range(dim), n))
    elif closure == "symmetrize":
        pool = list(itertools.combinations_with_replacement(range(dim), n))
    else:
        pool = list(itertools.product(range(dim), repeat=n))
    prods = {}
    for t in pool:
        target = group.sum(degs[i] for i in t)
        outs = [j for j in range(dim) if degs[j] == target]
        if outs and rng.random() < density:
            prods[t] = {j: rng.choice(coeffs) for j in outs if rng.random() < 0.6}
    while True:
        try:
            return GradedAlgebra.build(dim, n, prods, closure, field=field, group=group,
                                       degrees=degs, eps=eps, name=name)
        except AlgebraError as exc:
            # a generator forced to vanish by the closure rule; drop one and retry
            bad = next(t for t in sorted(prods) if str(t) in str(exc))
            del prods[bad]
