"""Grading groups and bicharacters."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import QQ, Field


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups; order 0 stands for an infinite factor.

    Elements are integer tuples with finite coordinates reduced into
    ``[0, order)``.  The empty product is the trivial group, whose only
    element is ``()``.
    """

    cyclic_orders: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(o) for o in self.cyclic_orders))
        for o in self.cyclic_orders:
            if o < 0 or o == 1:
                raise GradingError(f"cyclic order {o} not allowed (use 0 for Z, >= 2 for Z_m)")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    def element(self, g: Sequence[int] | int) -> tuple:
        if isinstance(g, int):
            g = (g,)
        g = tuple(int(x) for x in g)
        if len(g) != self.rank:
            raise GradingError(f"element {g} has {len(g)} coordinates, group has {self.rank}")
        return tuple(x % o if o else x for x, o in zip(g, self.cyclic_orders))

    @property
    def zero(self) -> tuple:
        return (0,) * self.rank

    def add(self, g: tuple, h: tuple) -> tuple:
        return tuple((a + b) % o if o else a + b for a, b, o in zip(g, h, self.cyclic_orders))

    def neg(self, g: tuple) -> tuple:
        return tuple((-a) % o if o else -a for a, o in zip(g, self.cyclic_orders))

    def sub(self, g: tuple, h: tuple) -> tuple:
        return self.add(g, self.neg(h))

    def sum(self, gs) -> tuple:
        out = self.zero
        for g in gs:
            out = self.add(out, g)
        return out


TRIVIAL_GROUP = AbelianGroup(())


class Bicharacter:
    """Bicharacter determined by its values on pairs of generators.

    ``eps(g, h) = prod_{a,b} table[a][b] ** (g[a] * h[b])``, which is
    multiplicative in each argument by construction.  :meth:`violations`
    checks skew-symmetry and compatibility with the finite orders.
    """

    def __init__(self, group: AbelianGroup, table: Sequence[Sequence] | None = None,
                 field: Field = QQ):
        self.group = group
        self.field = field
        r = group.rank
        if table is None:
            table = [[1] * r for _ in range(r)]
        if len(table) != r or any(len(row) != r for row in table):
            raise GradingError(f"bicharacter table must be {r}x{r}")
        self.table = tuple(tuple(field(x) for x in row) for row in table)
        for row in self.table:
            for x in row:
                if not x:
                    raise GradingError("bicharacter values must be nonzero")
        self._cache: dict = {}

    def __call__(self, g: tuple, h: tuple):
        key = (g, h)
        v = self._cache.get(key)
        if v is None:
            v = self.field.one
            for a, ga in enumerate(g):
                if not ga:
                    continue
                for b, hb in enumerate(h):
                    if hb:
                        v = v * self.table[a][b] ** (ga * hb)
            self._cache[key] = v
        return v

    def violations(self) -> list[str]:
        out = []
        one = self.field.one
        r = self.group.rank
        for a in range(r):
            for b in range(r):
                if self.table[a][b] * self.table[b][a] != one:
                    out.append(f"eps(g{a},g{b}) * eps(g{b},g{a}) != 1")
                for k, o in ((a, self.group.cyclic_orders[a]), (b, self.group.cyclic_orders[b])):
                    if o and self.table[a][b] ** o != one:
                        out.append(f"eps(g{a},g{b})^{o} != 1 although g{k} has order {o}")
                        break
        return out

    def is_trivial(self) -> bool:
        one = self.field.one
        return all(x == one for row in self.table for x in row)

    def __eq__(self, other):
        return (isinstance(other, Bicharacter) and self.group == other.group
                and self.field == other.field and self.table == other.table)

    def __hash__(self):
        return hash((self.group, self.table))

    def __repr__(self):
        return f"Bicharacter({self.group.cyclic_orders}, {self.table})"


def super_sign(field: Field = QQ) -> Bicharacter:
    """The Z_2 bicharacter ``eps(a, b) = (-1)**(a*b)``."""
    return Bicharacter(AbelianGroup((2,)), [[-1]], field)
