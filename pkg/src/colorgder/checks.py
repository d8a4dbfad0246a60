"""Check batteries grouped into suites, as run by ``colorgder verify``.

Every statement is checked on the solved operator spaces; a statement whose
hypotheses fail on the input produces a ``skip`` record with the reason.
"""
from __future__ import annotations

from .algebra import GradedAlgebra, commutativity_sign, require_valid, validate
from .extension import decomposition_check, embedding_checks, extend, identity_preservation
from .identities import check_identity, jordan
from .modules import ModuleError, appendix_submodules, classify_qder_end
from .operators import (add_spaces, closure_check, closure_failures, contains_all,
                        gder_decomposition_check, inclusion_chain, materialize, projected_all,
                        qc_structure_report, span_of_products)
from .report import Check

SUITES = ("s1", "s2-closures", "s3-extension", "s4-classification", "appendix")


def _deg(th) -> str:
    return "(" + ",".join(str(x) for x in th) + ")"


def suite_s1(alg: GradedAlgebra) -> list[Check]:
    chain = inclusion_chain(alg)
    bad = [_deg(th) for th, ok in chain.items() if not ok]
    return [Check.of("inclusion-chain", "ZDer <= Der <= QDer <= GDer <= End in every degree",
                     not bad, degrees=[_deg(th) for th in chain], failing=bad)]


def _closure(alg, cid, anchor, kind, a, b, target) -> Check:
    fails = []
    for D1, D2, _ in closure_failures(alg, kind, a, b, target):
        fails.append([_deg(D1.degree), _deg(D2.degree)])
        if len(fails) >= 3:
            break
    return Check.of(cid, anchor, not fails, first_failures=fails)


def suite_s2(alg: GradedAlgebra) -> list[Check]:
    require_valid(alg)
    sp = {nm: projected_all(alg, nm)
          for nm in ("der", "gder", "qder", "centroid", "qcentroid", "zder")}
    qc, qd = sp["qcentroid"], sp["qder"]
    out = []
    for nm in ("gder", "qder", "centroid"):
        out.append(_closure(alg, f"subalgebra-{nm}", f"{nm} is closed under the color bracket",
                            "bracket", nm, nm, nm))
    out.append(_closure(alg, "ideal-zder", "ZDer is a color ideal of Der",
                        "bracket", "zder", "der", "zder"))
    out.append(_closure(alg, "der-c-into-c", "[Der, C] <= C", "bracket", "der", "centroid",
                        "centroid"))
    out.append(_closure(alg, "qder-qc-into-qc", "[QDer, QC] <= QC", "bracket", "qder",
                        "qcentroid", "qcentroid"))
    out.append(_closure(alg, "c-der-into-der", "C . Der <= Der (composition)", "compose",
                        "centroid", "der", "der"))
    out.append(Check.of("c-in-qder", "C <= QDer", contains_all(qd, sp["centroid"])))
    out.append(_closure(alg, "qc-qc-into-qder", "[QC, QC] <= QDer", "bracket", "qcentroid",
                        "qcentroid", "qder"))
    out.append(Check.of("qder-plus-qc-in-gder", "QDer + QC <= GDer",
                        contains_all(sp["gder"], add_spaces(qd, qc))))
    # QC + [QC, QC] as a bracket-closed subspace of GDer
    fam = add_spaces(qc, span_of_products(alg, "bracket", qc, qc))
    out.append(Check.of("qc-plus-bracket-subalgebra", "QC + [QC, QC] is a subalgebra of GDer",
                        contains_all(sp["gder"], fam) and closure_check(alg, "bracket", fam, fam, fam),
                        dim=sum(s.dim for s in fam.values())))
    out.extend(_jordan_checks(alg, qc))
    out.append(_gder_decomposition(alg))
    out.extend(_qc_checks(alg))
    return out


def _jordan_checks(alg, qc) -> list[Check]:
    anchor = "QC with D1 . D2 = D1 D2 + eps(D1, D2) D2 D1 is a color Jordan algebra"
    if alg.field.characteristic == 2:
        return [Check.skipped("qc-jordan", anchor, "characteristic 2")]
    closed = closure_check(alg, "jordan", qc, qc, qc)
    if not closed:
        return [Check.of("qc-jordan", anchor, False, closed=False)]
    J = materialize(alg, qc, "jordan", "QC-jordan")
    ok = validate(J) and all(check_identity(J, i) for i in jordan())
    return [Check.of("qc-jordan", anchor, ok, closed=True, dim=J.dim)]


def _gder_decomposition(alg) -> Check:
    anchor = "GDer = QDer + QC for (anti)commutative algebras"
    if commutativity_sign(alg) is None:
        return Check.skipped("gder-decomposition", anchor,
                             "algebra is neither color commutative nor anticommutative")
    return Check.of("gder-decomposition", anchor, gder_decomposition_check(alg))


def _status(s: str, cid: str, anchor: str, **wit) -> Check:
    if s.startswith("skip"):
        return Check.skipped(cid, anchor, s.split(":", 1)[1].strip())
    return Check.of(cid, anchor, s == "pass", **wit)


def _qc_checks(alg) -> list[Check]:
    r = qc_structure_report(alg)
    wit = {k: r[k] for k in ("qc_dim", "bracket_closed", "compose_closed", "bracket_zero",
                             "center_dim")}
    return [
        Check.of("c-qc-into-center", "[C, QC] maps T into Z(T)", r["c_qc_into_center"],
                 center_dim=r["center_dim"]),
        _status(r["c_qc_zero"], "c-qc-zero", "[C, QC] = 0 when Z(T) = 0"),
        _status(r["lie_iff_associative"], "qc-lie-iff-associative",
                "QC is bracket-closed iff it is closed under composition", **wit),
        _status(r["lie_iff_abelian"], "qc-lie-iff-abelian",
                "QC is a color Lie algebra iff [QC, QC] = 0 (char does not divide n, Z(T) = 0)",
                **wit),
    ]


def suite_s3(alg: GradedAlgebra) -> list[Check]:
    require_valid(alg)
    car = extend(alg).carrier
    out = [Check.of("ext-valid", "the extended algebra passes validation", validate(car),
                    dim=car.dim),
           identity_preservation(alg)]
    out.extend(embedding_checks(alg))
    out.extend(decomposition_check(alg))
    return out


def suite_s4(alg: GradedAlgebra) -> list[Check]:
    anchor = "QDer = End classification for (anti)commutative algebras"
    try:
        v = classify_qder_end(alg)
    except ModuleError as exc:
        return [Check.skipped("classification", anchor, str(exc))]
    out = [Check.of("classification", anchor, all(ok for _, _, ok in v.consistency),
                    **v.to_json())]
    for cid, statement, ok in v.consistency:
        out.append(Check.of("classification-" + cid, statement, ok))
    return out


def suite_appendix(alg: GradedAlgebra | None = None, d: int | None = None) -> list[Check]:
    if d is None:
        d = alg.dim if alg is not None else 2
    if d < 2:
        return [Check.skipped("tensor-cube", "submodules of the tensor cube",
                              f"needs a space of dimension >= 2, got {d}")]
    return appendix_submodules(d)


RUNNERS = {
    "s1": suite_s1,
    "s2-closures": suite_s2,
    "s3-extension": suite_s3,
    "s4-classification": suite_s4,
    "appendix": suite_appendix,
}


def run_suite(alg: GradedAlgebra, suite: str) -> list[Check]:
    if suite == "all":
        out = []
        for s in SUITES:
            out.extend(RUNNERS[s](alg))
        return out
    if suite not in RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return RUNNERS[suite](alg)


__all__ = ["SUITES", "run_suite", "suite_s1", "suite_s2", "suite_s3", "suite_s4",
           "suite_appendix"]
