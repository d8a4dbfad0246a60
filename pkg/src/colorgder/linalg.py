"""Exact matrices, RREF, kernels and the subspace lattice.

Everything here is exact.  Over the rationals the elimination runs
fraction-free on integer rows (see ``_backend``) and the results are
converted back to reduced fractions; over GF(p) it runs on residues.

Subspaces are stored by their RREF basis, so two subspaces are equal exactly
when their representatives are identical.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import _backend
from .field import QQ, Field, Mod


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over ``field``."""

    rows: int
    cols: int
    entries: tuple
    field: Field = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        ent = tuple(field(x) for r in rows for x in r)
        return cls(len(rows), cols, ent, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ):
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ):
        z, o = field.zero, field.one
        return cls(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)), field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)),
                      self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        z = self.field.zero
        out = []
        ocols = [other.col(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                s = z
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                out.append(s)
        return Matrix(self.rows, other.cols, tuple(out), self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)), self.field)

    def scale(self, s) -> "Matrix":
        s = self.field(s)
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries), self.field)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        z = self.field.zero
        nz = [(k, b) for k, b in enumerate(v) if b]
        e, c = self.entries, self.cols
        out = []
        for i in range(self.rows):
            s = z
            base = i * c
            for k, b in nz:
                a = e[base + k]
                if a:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.entries)


# -- elimination -------------------------------------------------------------

def _int_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators, make rows primitive with positive leading entry, dedupe."""
    seen = set()
    out = []
    for row in rows:
        den = 1
        for x in row:
            if x:
                den = lcm(den, x.denominator)
        ir = [int(x * den) if x else 0 for x in row]
        g = 0
        lead = 0
        for x in ir:
            if x:
                g = gcd(g, x)
                if not lead:
                    lead = x
        if not g:
            continue
        if lead < 0:
            g = -g
        t = tuple(x // g for x in ir)
        if t not in seen:
            seen.add(t)
            out.append(list(t))
    return out


def _rref_rows(rows: Iterable[Sequence], ncols: int, field: Field) -> tuple[list[tuple], list[int]]:
    if field.characteristic == 0:
        red, piv = _backend.rref_int(_int_rows(rows), ncols)
        out = []
        for row, c in zip(red, piv):
            d = row[c]
            out.append(tuple(Fraction(x, d) if x else Fraction(0) for x in row))
        return out, list(piv)
    p = field.characteristic
    seen = set()
    raw = []
    for row in rows:
        t = tuple(x.v if isinstance(x, Mod) else int(x) % p for x in row)
        if any(t) and t not in seen:
            seen.add(t)
            raw.append(list(t))
    red, piv = _backend.rref_mod(raw, ncols, p)
    return [tuple(Mod(x, p) for x in row) for row in red], list(piv)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (same shape as ``m``) and pivot columns."""
    red, piv = _rref_rows((m.row(i) for i in range(m.rows)), m.cols, m.field)
    z = m.field.zero
    pad = [(z,) * m.cols] * (m.rows - len(red))
    return Matrix.from_rows(red + pad, m.field, m.cols), piv


def rank(m: Matrix) -> int:
    return len(_rref_rows((m.row(i) for i in range(m.rows)), m.cols, m.field)[1])


def _kernel_vectors(red: list[tuple], piv: list[int], ncols: int, field: Field) -> list[tuple]:
    z, o = field.zero, field.one
    pivset = set(piv)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [z] * ncols
        v[f] = o
        for row, c in zip(red, piv):
            if row[f]:
                v[c] = -row[f]
        vecs.append(tuple(v))
    return vecs


def nullspace_rows(rows: Iterable[Sequence], ncols: int, field: Field = QQ) -> "Subspace":
    red, piv = _rref_rows(rows, ncols, field)
    return Subspace.span(_kernel_vectors(red, piv, ncols, field), ncols, field)


def nullspace(m: Matrix) -> "Subspace":
    """Right kernel ``{v : m v = 0}``."""
    return nullspace_rows((m.row(i) for i in range(m.rows)), m.cols, m.field)


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**ambient_dim`` given by its RREF basis rows."""

    ambient_dim: int
    basis: tuple
    pivots: tuple
    field: Field = QQ

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, field: Field = QQ) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient {ambient_dim}")
        red, piv = _rref_rows(vectors, ambient_dim, field)
        return cls(ambient_dim, tuple(red), tuple(piv), field)

    @classmethod
    def zero(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls(ambient_dim, (), (), field)

    @classmethod
    def full(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        m = Matrix.identity(ambient_dim, field)
        return cls(ambient_dim, tuple(m.row(i) for i in range(ambient_dim)),
                   tuple(range(ambient_dim)), field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        return Matrix.from_rows(self.basis, self.field, self.ambient_dim)

    def coordinates(self, v: Sequence):
        """Coordinates of ``v`` in the RREF basis, or ``None`` if ``v`` is outside."""
        coeffs = [v[c] for c in self.pivots]
        res = list(v)
        for a, b in zip(coeffs, self.basis):
            if a:
                for j, x in enumerate(b):
                    if x:
                        res[j] = res[j] - a * x
        if any(res):
            return None
        return coeffs

    def contains_vector(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length")
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains_vector(v)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim


def _check_same(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")
    if a.field != b.field:
        raise ValueError("subspaces over different fields")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return Subspace.span(a.basis + b.basis, a.ambient_dim, a.field)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[[A, A], [B, 0]]``; rows ``[0, w]`` span the intersection."""
    _check_same(a, b)
    n = a.ambient_dim
    z = a.field.zero
    rows = [tuple(v) + tuple(v) for v in a.basis]
    rows += [tuple(v) + (z,) * n for v in b.basis]
    red, piv = _rref_rows(rows, 2 * n, a.field)
    inter = [row[n:] for row, c in zip(red, piv) if c >= n]
    return Subspace.span(inter, n, a.field)


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is contained in ``a`` (rank test)."""
    _check_same(a, b)
    if b.dim > a.dim:
        return False
    return subspace_sum(a, b).dim == a.dim


def is_direct_sum(a: Subspace, b: Subspace, whole: Subspace) -> bool:
    """True iff ``whole = a (+) b`` as an internal direct sum."""
    _check_same(a, b)
    _check_same(a, whole)
    if a.dim + b.dim != whole.dim:
        return False
    if not subspace_intersect(a, b).is_zero():
        return False
    return subspace_sum(a, b) == whole


def image(m: Matrix, domain: Subspace | None = None) -> Subspace:
    """Column space of ``m``, or ``m(domain)``."""
    if domain is None:
        vecs = [m.col(j) for j in range(m.cols)]
    else:
        vecs = [m.apply(v) for v in domain.basis]
    return Subspace.span(vecs, m.rows, m.field)


def solve_coordinates(vectors: Sequence[Sequence], target: Sequence, field: Field = QQ):
    """Coefficients ``c`` with ``sum c_i vectors[i] == target``, or ``None``."""
    k = len(vectors)
    n = len(target)
    rows = [tuple(vectors[i][j] for i in range(k)) + (-field(target[j]),) for j in range(n)]
    ns = nullspace_rows(rows, k + 1, field)
    for v in ns.basis:
        if v[k]:
            return [x / v[k] for x in v[:k]]
    return None
