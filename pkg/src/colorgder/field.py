"""Base fields: the rationals and prime fields GF(p).

Rational scalars are :class:`fractions.Fraction`.  Prime-field scalars are
:class:`Mod` instances.  Both support the ordinary arithmetic operators, so
the algorithms elsewhere in the package are written once against plain
``+ - * /``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@total_ordering
class Mod:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, Mod):
            if o.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({o.p})")
            return o.v
        if isinstance(o, int):
            return o % self.p
        if isinstance(o, Fraction):
            return (o.numerator * pow(o.denominator, -1, self.p)) % self.p
        return NotImplemented

    def __add__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        return Mod(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        if w == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Mod(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return w
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Mod(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            if self.v == 0:
                raise ZeroDivisionError("0 has no inverse")
            return Mod(pow(pow(self.v, -1, self.p), -k, self.p), self.p)
        return Mod(pow(self.v, k, self.p), self.p)

    def __eq__(self, o):
        w = self._other(o)
        if w is NotImplemented:
            return False
        return self.v == w

    def __lt__(self, o):
        # only used for deterministic sorting
        return self.v < self._other(o)

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """A base field.  ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s) -> object:
        """Parse ``"p/q"``, ``"p"`` or an int."""
        if isinstance(s, str):
            return self(Fraction(s.strip()))
        if isinstance(s, (int, Fraction)):
            return self(s)
        raise ValueError(f"cannot parse scalar {s!r}")

    def format(self, x) -> str:
        raise NotImplementedError

    def to_doc(self) -> dict:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Mod):
            raise TypeError("cannot coerce a prime-field residue into QQ")
        return Fraction(x)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def to_doc(self) -> dict:
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime must be below 2**31")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} is not in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Mod(int(x), self.p)

    def format(self, x) -> str:
        return str(self(x).v)

    def to_doc(self) -> dict:
        return {"kind": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_doc(doc: dict | None) -> Field:
    if doc is None or doc.get("kind", "Q") == "Q":
        return QQ
    if doc["kind"] == "Fp":
        return PrimeField(int(doc["p"]))
    raise ValueError(f"unknown field kind {doc['kind']!r}")
