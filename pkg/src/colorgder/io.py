"""JSON algebra documents.

Schema (indices are 0-based)::

    {
      "name": "A3",                      optional
      "field": {"kind": "Q"},            or {"kind": "Fp", "p": 7}; optional
      "dim": 3, "arity": 3,
      "group": [2],                      cyclic orders, 0 = infinite; optional
      "degrees": [[0], [1], [1]],        one element per basis vector; optional
      "bicharacter": [["-1"]],           generator table as "p/q" strings; optional
      "closure": "antisymmetrize",       "none" | "antisymmetrize" | "symmetrize"
      "products": [{"args": [0, 1, 2], "out": {"0": "1"}}]
    }

:func:`dumps_algebra` writes the canonical form: every nonzero product
listed in lexicographic order, ``closure`` set to ``"none"``, scalars as
reduced ``"p/q"`` strings.  Loading and re-dumping a canonical document
reproduces it byte for byte.
"""
from __future__ import annotations

import json
import re

from .algebra import AlgebraError, GradedAlgebra, validation_errors
from .field import Field, field_from_doc
from .grading import AbelianGroup, Bicharacter, GradingError

KEYS = ("name", "field", "dim", "arity", "group", "degrees", "bicharacter", "closure", "products")


class DocumentError(ValueError):
    """Malformed or invalid algebra document, with a location."""

    def __init__(self, message: str, path: str = "", line: int | None = None,
                 source: str = "<document>"):
        self.message = message
        self.path = path
        self.line = line
        self.source = source
        loc = source + (f":{line}" if line else "")
        super().__init__(f"{loc}: {path + ': ' if path else ''}{message}")


def _line_of(text: str, key: str, occurrence: int = 0) -> int | None:
    hits = [m.start() for m in re.finditer(re.escape(f'"{key}"'), text)]
    if occurrence < len(hits):
        return text.count("\n", 0, hits[occurrence]) + 1
    return None


def loads_algebra(text: str, source: str = "<document>", validate: bool = True) -> GradedAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg} (column {exc.colno})",
                            line=exc.lineno, source=source) from None

    def fail(msg, path, key=None, occ=0):
        raise DocumentError(msg, path, _line_of(text, key or path, occ), source)

    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", line=1, source=source)
    extra = sorted(set(doc) - set(KEYS))
    if extra:
        fail(f"unknown field {extra[0]!r}", extra[0])
    for k in ("dim", "arity", "products"):
        if k not in doc:
            raise DocumentError(f"missing required field {k!r}", line=1, source=source)
    try:
        field = field_from_doc(doc.get("field"))
    except (ValueError, KeyError, TypeError) as exc:
        fail(str(exc), "field")
    dim, arity = doc["dim"], doc["arity"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        fail("must be a nonnegative integer", "dim")
    if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
        fail("must be a positive integer", "arity")
    try:
        group = AbelianGroup(tuple(int(o) for o in doc.get("group", [])))
    except (GradingError, ValueError, TypeError) as exc:
        fail(str(exc), "group")
    degrees = doc.get("degrees")
    if degrees is not None:
        if not isinstance(degrees, list) or len(degrees) != dim:
            fail(f"expected {dim} degrees", "degrees")
        for k, g in enumerate(degrees):
            if not isinstance(g, list) or len(g) != group.rank or \
                    not all(isinstance(x, int) for x in g):
                fail(f"degree must be a list of {group.rank} integers", f"degrees[{k}]", "degrees")
    eps = None
    if "bicharacter" in doc:
        try:
            table = [[field.parse(x) for x in row] for row in doc["bicharacter"]]
            eps = Bicharacter(group, table, field)
        except (GradingError, ValueError, TypeError, ZeroDivisionError) as exc:
            fail(str(exc), "bicharacter")
    closure = doc.get("closure", "none")
    prods = {}
    if not isinstance(doc["products"], list):
        fail("must be a list", "products")
    for k, p in enumerate(doc["products"]):
        path = f"products[{k}]"
        if not isinstance(p, dict) or set(p) != {"args", "out"}:
            fail('each product needs exactly "args" and "out"', path, "products")
        args = p["args"]
        if not isinstance(args, list) or len(args) != arity or \
                not all(isinstance(i, int) and 0 <= i < dim for i in args):
            fail(f"args must be {arity} indices in [0, {dim})", path + ".args", "args", k)
        t = tuple(args)
        if t in prods:
            fail(f"duplicate product {list(t)}", path + ".args", "args", k)
        if not isinstance(p["out"], dict):
            fail("out must be an object", path + ".out", "args", k)
        out = {}
        for j, x in p["out"].items():
            try:
                jj = int(j)
                if not 0 <= jj < dim:
                    raise ValueError(f"output index {j} out of range")
                out[jj] = field.parse(x)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                fail(str(exc), f"{path}.out[{j!r}]", "args", k)
        prods[t] = out
    try:
        alg = GradedAlgebra.build(dim, arity, prods, closure, field=field, group=group,
                                  degrees=degrees, eps=eps, name=str(doc.get("name", "")))
    except (AlgebraError, GradingError, ValueError) as exc:
        raise DocumentError(str(exc), "products", _line_of(text, "products"), source) from None
    if validate:
        errs = validation_errors(alg)
        if errs:
            raise DocumentError("; ".join(errs), "", None, source)
    return alg


def load_algebra(path: str, validate: bool = True) -> GradedAlgebra:
    with open(path, encoding="utf-8") as fh:
        return loads_algebra(fh.read(), source=str(path), validate=validate)


def algebra_to_doc(alg: GradedAlgebra) -> dict:
    f: Field = alg.field
    doc = {}
    if alg.name:
        doc["name"] = alg.name
    doc["field"] = f.to_doc()
    doc["dim"] = alg.dim
    doc["arity"] = alg.arity
    doc["group"] = list(alg.group.cyclic_orders)
    doc["degrees"] = [list(g) for g in alg.degrees]
    doc["bicharacter"] = [[f.format(x) for x in row] for row in alg.eps.table]
    doc["closure"] = "none"
    doc["products"] = [
        {"args": list(t), "out": {str(j): f.format(x) for j, x in enumerate(v) if x}}
        for t, v in sorted(alg.structure.items())
    ]
    return doc


def dumps_algebra(alg: GradedAlgebra) -> str:
    return dumps(algebra_to_doc(alg))


def dumps(obj) -> str:
    """Canonical JSON text used for every file this package writes."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def save_algebra(alg: GradedAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_algebra(alg))


def load_matrix(path: str, field: Field) -> list[list]:
    """A square matrix file: a JSON list of rows of ``"p/q"`` strings or integers."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", line=exc.lineno, source=path) from None
    if not isinstance(rows, list) or not rows or \
            any(not isinstance(r, list) or len(r) != len(rows) for r in rows):
        raise DocumentError("matrix must be a nonempty square list of rows", source=path)
    try:
        return [[field.parse(x) for x in r] for r in rows]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc), source=path) from None


__all__ = [
    "DocumentError", "loads_algebra", "load_algebra", "algebra_to_doc", "dumps_algebra",
    "dumps", "save_algebra", "load_matrix",
]
