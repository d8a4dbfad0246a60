"""Command-line front end.

    colorgder spaces  --input FILE --class der [--degree 1,0] [--json OUT]
    colorgder verify  --input FILE [--suite all] [--json OUT]
    colorgder catalog --make D --n 3 [--out FILE]
    colorgder extend  --input FILE [--out FILE] [--json OUT]

Exit status: 0 when no check failed, 1 on a failed check, 2 on bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import sys

from . import __version__
from .algebra import (AlgebraError, GradedAlgebra, make_A, make_D, make_LB, make_Lalpha,
                      make_zero)
from .checks import SUITES, run_suite, suite_s3
from .extension import extend
from .field import QQ, PrimeField
from .grading import GradingError
from .io import DocumentError, dumps, dumps_algebra, load_matrix, loads_algebra
from .modules import ModuleError
from .operators import (CLASSES, OperatorError, canonical_class, operator_space,
                        realizable_degrees)
from .report import FAIL, jsonable, summarize

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> tuple[str, str]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return raw.decode("utf-8"), hashlib.sha256(raw).hexdigest()
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None


def _load(path: str) -> tuple[GradedAlgebra, str]:
    text, digest = _read(path)
    return loads_algebra(text, source=path), digest


def _parse_degree(s: str, alg: GradedAlgebra) -> tuple:
    parts = [p for p in s.split(",") if p.strip()]
    try:
        g = tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"degree {s!r} is not a comma-separated list of integers") from None
    if len(g) != alg.group.rank:
        raise InputError(f"degree {s!r} has {len(g)} coordinates, the grading group has "
                         f"{alg.group.rank}")
    return alg.group.element(g)


def _deg(th) -> str:
    return "(" + ",".join(str(x) for x in th) + ")"


def _emit(report: dict, lines: list[str], json_path: str | None, out=None) -> None:
    out = out or sys.stdout
    for ln in lines:
        print(ln, file=out)
    if json_path:
        with open(json_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dumps(jsonable(report)))


def _check_lines(checks) -> list[str]:
    lines = []
    for c in checks:
        tail = f" ({c.reason})" if c.reason else ""
        lines.append(f"{c.status.upper():4}  {c.id}: {c.anchor}{tail}")
    s = summarize(checks)
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip")
    return lines


def _header(cmd: list[str], digest: str | None, alg: GradedAlgebra | None) -> dict:
    rep = {"command": cmd}
    if digest is not None:
        rep["input_sha256"] = digest
    if alg is not None:
        rep["algebra"] = {"name": alg.name, "dim": alg.dim, "arity": alg.arity,
                          "group": list(alg.group.cyclic_orders), "field": alg.field.to_doc()}
    return rep


# -- commands ------------------------------------------------------------------

def cmd_spaces(args, argv) -> int:
    alg, digest = _load(args.input)
    cls = canonical_class(args.cls)
    degs = [_parse_degree(args.degree, alg)] if args.degree is not None else realizable_degrees(alg)
    rep = _header(argv, digest, alg)
    rep["class"] = cls
    blocks = []
    lines = [f"{cls} of {alg.name or args.input} (dim {alg.dim}, arity {alg.arity})"]
    total = 0
    for th in degs:
        sp = operator_space(alg, cls, th)
        total += sp.dim
        blocks.append({"degree": list(th), "dim": sp.dim, "members": sp.members,
                       "basis": [list(v) for v in sp.basis.basis]})
        lines.append(f"degree {_deg(th)}: dim {sp.dim}")
        for v in sp.basis.basis:
            lines.append("  [" + " ".join(alg.field.format(x) for x in v) + "]")
    lines.append(f"total dim {total}")
    rep["spaces"] = blocks
    rep["total_dim"] = total
    _emit(rep, lines, args.json)
    return EXIT_OK


def cmd_verify(args, argv) -> int:
    alg, digest = _load(args.input)
    checks = run_suite(alg, args.suite)
    rep = _header(argv, digest, alg)
    rep["suite"] = args.suite
    rep["checks"] = [c.to_json() for c in checks]
    rep["summary"] = summarize(checks)
    _emit(rep, _check_lines(checks), args.json)
    return EXIT_FAIL if any(c.status == FAIL for c in checks) else EXIT_OK


def _field(args):
    if args.field in (None, "Q", "QQ"):
        return QQ
    try:
        return PrimeField(int(args.field))
    except ValueError as exc:
        raise InputError(f"--field: {exc}") from None


def cmd_catalog(args, argv) -> int:
    field = _field(args)
    mk = args.make
    if mk != "zero" and args.n is None:
        raise InputError(f"--make {mk} needs --n")
    if mk == "A":
        alg = make_A(args.n, field)
    elif mk == "D":
        alg = make_D(args.n, field)
    elif mk == "LB":
        if not args.B:
            raise InputError("--make LB needs --B FILE")
        B = load_matrix(args.B, field)
        if len(B) != args.n + 1:
            raise InputError(f"B must be {args.n + 1}x{args.n + 1} for n={args.n}")
        alg = make_LB(args.n, B, field)
    elif mk == "Lalpha":
        try:
            alpha = field.parse(args.alpha if args.alpha is not None else "1")
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"--alpha: {exc}") from None
        alg = make_Lalpha(args.n, alpha, field)
    else:
        if args.dim is None:
            raise InputError("--make zero needs --dim")
        alg = make_zero(args.dim, args.n if args.n is not None else 2, field)
    text = dumps_algebra(alg)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {args.out}: {alg.name}, dim {alg.dim}, arity {alg.arity}, "
              f"{len(alg.structure)} nonzero products")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_extend(args, argv) -> int:
    alg, digest = _load(args.input)
    ext = extend(alg)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dumps_algebra(ext.carrier))
    checks = suite_s3(alg)
    rep = _header(argv, digest, alg)
    rep["extended"] = {"dim": ext.carrier.dim, "t_exponents": list(ext.exponents)}
    rep["checks"] = [c.to_json() for c in checks]
    rep["summary"] = summarize(checks)
    lines = [f"extended algebra: dim {ext.carrier.dim}" +
             (f", written to {args.out}" if args.out else "")]
    _emit(rep, lines + _check_lines(checks), args.json)
    return EXIT_FAIL if any(c.status == FAIL for c in checks) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colorgder",
                                description="Operator spaces of color n-ary algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spaces", help="dimension and RREF basis of an operator space")
    s.add_argument("--input", required=True)
    s.add_argument("--class", dest="cls", required=True, choices=CLASSES + ("c", "qc"))
    s.add_argument("--degree", help="comma-separated group element; all degrees if omitted")
    s.add_argument("--json")
    s.set_defaults(func=cmd_spaces)

    v = sub.add_parser("verify", help="run a check battery")
    v.add_argument("--input", required=True)
    v.add_argument("--suite", default="all", choices=SUITES + ("all",))
    v.add_argument("--json")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="write a catalog algebra document")
    c.add_argument("--make", required=True, choices=("A", "D", "LB", "Lalpha", "zero"))
    c.add_argument("--n", type=int)
    c.add_argument("--B", help="JSON file with the (n+1)x(n+1) matrix for LB")
    c.add_argument("--alpha", help="scalar for Lalpha, as p/q")
    c.add_argument("--dim", type=int, help="dimension of the zero algebra")
    c.add_argument("--field", help="a prime p for GF(p); rationals by default")
    c.add_argument("--out")
    c.set_defaults(func=cmd_catalog)

    e = sub.add_parser("extend", help="build the doubled algebra and check the embedding")
    e.add_argument("--input", required=True)
    e.add_argument("--out")
    e.add_argument("--json")
    e.set_defaults(func=cmd_extend)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, argv)
    except (InputError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AlgebraError, GradingError, OperatorError, ModuleError, ValueError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
