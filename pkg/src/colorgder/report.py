"""Check records shared by the verification batteries and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .field import Mod

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    @classmethod
    def of(cls, id: str, anchor: str, ok: bool, **witness) -> "Check":
        return cls(id, anchor, PASS if ok else FAIL, witness)

    @classmethod
    def skipped(cls, id: str, anchor: str, reason: str) -> "Check":
        return cls(id, anchor, SKIP, {}, reason)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.witness:
            out["witness"] = jsonable(self.witness)
        return out


def jsonable(x):
    """Plain JSON data with exact scalars as ``"p/q"`` strings and string keys."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Mod):
        return str(x.v)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def summarize(checks) -> dict:
    out = {PASS: 0, FAIL: 0, SKIP: 0}
    for c in checks:
        out[c.status] += 1
    return out
