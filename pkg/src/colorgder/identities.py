"""Multilinear identities, their colorization, and checking them on an algebra.

A term is a coefficient times a bracket tree.  Trees are nested tuples whose
leaves are variable numbers ``1..m``; e.g. ``((1, 2, 3), 4, 5)`` is
``[[x1, x2, x3], x4, x5]``.  Each variable appears exactly once per term.

Colorization multiplies each term by the sign picked up when the variables,
listed left to right, are brought from ``1, 2, ..., m`` into the term's leaf
order by adjacent swaps: swapping neighbours ``a, b`` contributes
``eps(a, b)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import GradedAlgebra
from .grading import Bicharacter


class IdentityError(ValueError):
    pass


def leaves(tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    out = []
    for ch in tree:
        out.extend(leaves(ch))
    return out


def tree_arity_ok(tree, n: int) -> bool:
    if isinstance(tree, int):
        return True
    return len(tree) == n and all(tree_arity_ok(ch, n) for ch in tree)


@dataclass(frozen=True)
class Identity:
    """``sum coeff * tree == 0`` in ``m`` variables."""

    name: str
    m: int
    terms: tuple  # of (coefficient, tree)
    arity: int = dc_field(default=0)

    def __post_init__(self):
        want = list(range(1, self.m + 1))
        for coef, tree in self.terms:
            if sorted(leaves(tree)) != want:
                raise IdentityError(f"{self.name}: term {tree} is not multilinear in x1..x{self.m}")
            if self.arity and not tree_arity_ok(tree, self.arity):
                raise IdentityError(f"{self.name}: term {tree} is not {self.arity}-ary")


def colorized_sign(order: Sequence[int], degrees, eps: Bicharacter):
    """Sign of the word with leaf order ``order`` relative to ``1..m``.

    ``degrees`` maps a variable number to its group element (a dict, or a
    sequence indexed by ``variable - 1``).  Computed by bubbling each target
    variable into place with adjacent swaps.
    """
    m = len(order)
    if sorted(order) != list(range(1, m + 1)):
        raise IdentityError(f"{list(order)} is not a permutation of 1..{m}")
    deg = (lambda v: degrees[v]) if isinstance(degrees, dict) else (lambda v: degrees[v - 1])
    cur = list(range(1, m + 1))
    s = eps.field.one
    for p, want in enumerate(order):
        q = cur.index(want)
        while q > p:
            a, b = cur[q - 1], cur[q]
            s = s * eps(deg(a), deg(b))
            cur[q - 1], cur[q] = b, a
            q -= 1
    return s


class _OneCache(dict):
    def __missing__(self, field):
        v = self[field] = field.one
        return v


_ONE = _OneCache()


def _eval(alg: GradedAlgebra, tree, assign) -> dict:
    if isinstance(tree, int):
        return {assign[tree - 1]: _ONE[alg.field]}
    parts = []
    for ch in tree:
        v = _eval(alg, ch, assign)
        if not v:
            return {}
        parts.append(list(v.items()))
    out: dict = {}
    st = alg.structure
    for combo in itertools.product(*parts):
        vec = st.get(tuple(i for i, _ in combo))
        if vec is None:
            continue
        coef = combo[0][1]
        for _, x in combo[1:]:
            coef = coef * x
        for j, cj in enumerate(vec):
            if cj:
                out[j] = out[j] + coef * cj if j in out else coef * cj
    return {j: x for j, x in out.items() if x}


def evaluate(alg: GradedAlgebra, ident: Identity, assign: Sequence[int]) -> dict:
    """Value of the colorized identity at basis elements ``e_{assign[0]}, ...``."""
    degs = [alg.degrees[i] for i in assign]
    trivial = alg.eps.is_trivial()
    out: dict = {}
    for coef, tree in ident.terms:
        v = _eval(alg, tree, assign)
        if not v:
            continue
        f = alg.field(coef)
        if not trivial:
            f = f * colorized_sign(leaves(tree), degs, alg.eps)
        for j, x in v.items():
            out[j] = out.get(j, alg.field.zero) + f * x
    return {j: x for j, x in out.items() if x}


def identity_violation(alg: GradedAlgebra, ident: Identity):
    """First basis assignment where the identity fails, or ``None``."""
    for tree in (t for _, t in ident.terms):
        if not tree_arity_ok(tree, alg.arity):
            raise IdentityError(f"{ident.name} does not match arity {alg.arity}")
    for assign in itertools.product(range(alg.dim), repeat=ident.m):
        if evaluate(alg, ident, assign):
            return assign
    return None


def check_identity(alg: GradedAlgebra, ident: Identity) -> bool:
    return identity_violation(alg, ident) is None


# -- built-in identities -------------------------------------------------------

def gamma_commutativity(n: int, gamma: int) -> list[Identity]:
    """One identity per adjacent pair of slots."""
    out = []
    base = tuple(range(1, n + 1))
    tag = "anticommutative" if gamma == -1 else "commutative"
    for i in range(n - 1):
        sw = base[:i] + (base[i + 1], base[i]) + base[i + 2:]
        out.append(Identity(f"{tag}[{i + 1},{i + 2}]", n,
                            ((1, base), (-gamma, sw)), n))
    return out


def filippov(n: int) -> Identity:
    """``[[x_1..x_n], y_2..y_n] = sum_i [x_1 .. [x_i, y_2..y_n] .. x_n]``."""
    xs = tuple(range(1, n + 1))
    ys = tuple(range(n + 1, 2 * n))
    terms = [(1, (xs,) + ys)]
    for i in range(n):
        inner = (xs[i],) + ys
        terms.append((-1, xs[:i] + (inner,) + xs[i + 1:]))
    return Identity("filippov", 2 * n - 1, tuple(terms), n)


def associativity() -> Identity:
    return Identity("associative", 3, ((1, ((1, 2), 3)), (-1, (1, (2, 3)))), 2)


def jacobi() -> Identity:
    return Identity("jacobi", 3, ((1, ((1, 2), 3)), (1, ((2, 3), 1)), (1, ((3, 1), 2))), 2)


def jordan() -> list[Identity]:
    """Commutativity plus the linearized Jordan identity in x, y, z, w.

    Variables: x=1, y=2, z=3, w=4.  The colorized form agrees with the
    familiar color Jordan identity up to an overall factor ``eps(z, x)``.
    """
    x, y, z, w = 1, 2, 3, 4
    terms = []
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        terms.append((1, (((a, b), w), c)))
        terms.append((-1, ((a, b), (w, c))))
    return [Identity("commutative[1,2]", 2, ((1, (1, 2)), (-1, (2, 1))), 2),
            Identity("jordan", 4, tuple(terms), 2)]


def builtin_identities(n: int) -> dict[str, list[Identity]]:
    """Named identity families available for arity ``n``."""
    fam = {
        "anticommutative": gamma_commutativity(n, -1),
        "commutative": gamma_commutativity(n, 1),
        "filippov": [filippov(n)],
    }
    if n == 2:
        fam["associative"] = [associativity()]
        fam["jacobi"] = [jacobi()]
        fam["jordan"] = jordan()
    return fam


def satisfied_families(alg: GradedAlgebra) -> list[str]:
    return [name for name, ids in builtin_identities(alg.arity).items()
            if all(check_identity(alg, i) for i in ids)]


__all__ = [
    "Identity", "IdentityError", "colorized_sign", "check_identity", "identity_violation",
    "evaluate", "gamma_commutativity", "filippov", "associativity", "jacobi", "jordan",
    "builtin_identities", "satisfied_families", "leaves",
]
