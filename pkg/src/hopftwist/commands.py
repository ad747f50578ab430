"""Command dispatch: each subcommand turns a Document into a Report."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .analysis import (
    ModeUnsupported,
    center_upto,
    simplicity_verdict,
    structure_report,
    support_report,
)
from .builtins import builtin
from .cocycle import check_inverse, cocycle_axiom_check, eval_J, eval_Jinv, eval_Q, eval_RJ
from .documents import SCHEMA_VERSION, Document, SchemaError, parse_scalar, serialize
from .expr import ExprSyntaxError, UnknownName
from .hopfmodel import validate_hopf
from .liecore import (
    Bivector,
    CentralizerViolation,
    NotBlockDecomposable,
    cybe_check,
    jacobi_violations,
    left_invariance_failures,
    prop54_decompose,
    realization_failures,
)
from .twistalg import (
    TwistedAlgebra,
    format_scalar,
    iterated_twisted_product,
    left_twisted_product,
    twisted_hopf_product,
    twisted_product,
)

DEFAULT_DEGREE = 4
DEFAULT_BOX = 4
DEFAULT_CHECK_BOX = 1


@dataclass
class Report:
    command: str
    document: str
    status: str                         # ok | fail
    result: dict
    text: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1

    def as_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "command": self.command,
                "document": self.document, "status": self.status, "result": self.result}


def emit_report(rep: Report, fmt: str = "text") -> bytes:
    if fmt == "machine":
        return (json.dumps(rep.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode()
    lines = [f"{rep.command}: {rep.document}"] + [f"  {t}" for t in rep.text]
    if rep.status != "ok":
        lines.append("status: FAIL")
    return ("\n".join(lines) + "\n").encode()


def _ok(flag: bool) -> str:
    return "ok" if flag else "fail"


# ----------------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------------


def cmd_validate(doc: Document, opts: dict) -> Report:
    hopf = validate_hopf(doc.group)
    derivs = []
    for D in doc.derivations:
        derivs.append({"name": D.name, "kind": D.kind, "tag_ok": D.check_tag(),
                       "left_invariance_failures": left_invariance_failures(D)})
    jac = jacobi_violations(doc.lie) if doc.lie else []
    real = realization_failures(doc.lie, doc.derivations) if doc.lie and doc.derivations else []
    ok = (hopf.ok and not jac and not real
          and all(d["tag_ok"] and not d["left_invariance_failures"] for d in derivs))
    result = {"hopf": hopf.as_dict(), "jacobi_violations": [list(v) for v in jac],
              "realization_failures": [list(v) for v in real], "derivations": derivs,
              "cocycle": doc.cocycle.kind, "mode": doc.group.mode}
    text = [f"Hopf axioms: {'pass' if hopf.ok else 'FAIL'}"]
    text += [f"  {a} violated at {w}: {d}" for a, w, d in hopf.failures]
    if doc.lie:
        text.append(f"Jacobi identity: {'pass' if not jac else 'FAIL'}")
        text.append(f"realization respects brackets: {'pass' if not real else 'FAIL'}")
        text += [f"  [{a},{b}] differs on {f}" for a, b, f in real]
    for d in derivs:
        inv = "left-invariant" if not d["left_invariance_failures"] else \
            "NOT left-invariant on " + ", ".join(d["left_invariance_failures"])
        tag = "tag ok" if d["tag_ok"] else "tag mismatch"
        text.append(f"derivation {d['name']} ({d['kind']}): {inv}, {tag}")
    return Report("validate", doc.name, _ok(ok), result, text)


def cmd_present(doc: Document, opts: dict) -> Report:
    alg = TwistedAlgebra(doc.cocycle)
    P = alg.P
    rels = P.relations(alg)
    result = {"relations": rels, "route": P.route, "verified": P.verified,
              "checks": [{"relation": n, "holds": ok} for n, ok in P.checks],
              "normal_form_order": list(doc.group.torus) + list(doc.group.filtered)}
    text = [r["text"] for r in rels] or ["(no relations: single generator)"]
    text.append(f"relations re-verified through the twisted product: {'yes' if P.verified else 'NO'}")
    return Report("present", doc.name, _ok(P.verified), result, text)


_PRODUCTS = {"right": twisted_product, "left": left_twisted_product, "hopf": twisted_hopf_product}


def cmd_multiply(doc: Document, opts: dict) -> Report:
    f = doc.parse_element(opts["left"], "left operand")
    g = doc.parse_element(opts["right"], "right operand")
    kind = opts.get("product", "right")
    prod = _PRODUCTS[kind](f, g, doc.cocycle)
    result = {"product": kind, "left": str(f), "right": str(g), "commutative_basis": str(prod)}
    text = [f"({f}) · ({g}) = {prod}   [commutative basis]"]
    if kind == "right":
        alg = TwistedAlgebra(doc.cocycle)
        nf = alg.to_nf(prod)
        result["normal_form"] = alg.nf_str(nf)
        text.append(f"normal form: {alg.nf_str(nf)}")
    return Report("multiply", doc.name, "ok", result, text)


_LETTER = re.compile(r"^([A-Za-z_][A-Za-z_0-9']*)(?:\^\(?(-?\d+)\)?)?$")


def parse_word(doc: Document, text: str) -> list[tuple]:
    g = doc.group
    letters: list[tuple] = []
    parts = [p.strip() for p in re.split(r"[·*]", text)]
    if not text.strip() or any(not p for p in parts):
        raise ExprSyntaxError("expected letters separated by '·' or '*'", "word")
    for p in parts:
        if p == "1":
            continue
        m = _LETTER.match(p)
        if m is None:
            raise ExprSyntaxError(f"cannot read letter {p!r}", "word")
        name, e = m.group(1), int(m.group(2) or 1)
        if name in g.torus:
            i = g.torus.index(name)
            letters.extend([("x", i, 1 if e > 0 else -1)] * abs(e))
        elif name in g.filtered:
            if e < 0:
                raise ExprSyntaxError(f"{name} is not invertible", "word")
            letters.extend([("z", g.filtered.index(name), 1)] * e)
        else:
            raise UnknownName(f"unknown generator {name!r}", "word")
    return letters


def cmd_normal_form(doc: Document, opts: dict) -> Report:
    alg = TwistedAlgebra(doc.cocycle)
    letters = parse_word(doc, opts["word"])
    nf = alg.normal_form(letters)
    agrees = nf.expand() == iterated_twisted_product(doc.cocycle, letters)
    result = {"word": opts["word"], "normal_form": str(nf), "oracle_agrees": agrees}
    text = [f"{opts['word']} = {nf}",
            f"agrees with the iterated twisted product: {'yes' if agrees else 'NO'}"]
    return Report("normal-form", doc.name, _ok(agrees), result, text)


def _center(doc: Document, opts: dict):
    d = opts.get("degree")
    if d is None:
        d = doc.options.get("degree", DEFAULT_DEGREE)
    box = opts.get("box")
    if box is None:
        box = doc.options.get("box", DEFAULT_BOX)
    alg = TwistedAlgebra(doc.cocycle)
    return alg, center_upto(alg, d, box)


def _center_dict(cb) -> dict:
    return {"degree": cb.degree, "box": cb.box, "dimension": cb.dimension,
            "basis": [str(e) for e in cb.elements], "oracle_verified": cb.verified,
            "constants_only": cb.constants_only,
            "predicted_dimension": None if cb.predicted is None else len(cb.predicted),
            "matches_prediction": cb.matches_prediction, "warnings": cb.warnings}


def cmd_center(doc: Document, opts: dict) -> Report:
    alg, cb = _center(doc, opts)
    result = _center_dict(cb)
    if cb.constants_only:
        text = [f"center (degree ≤ {cb.degree}): constants only"]
    else:
        text = [f"center (degree ≤ {cb.degree}): " + "{" + ", ".join(result["basis"]) + "}"]
    text.append(f"torus exponents searched: [-{cb.box}, {cb.box}]")
    text.append("every basis element commutes with all generators under the twisted product: "
                + ("yes" if all(cb.verified) else "NO"))
    if cb.predicted is not None:
        text.append(f"predicted center (functions on G/H) in the same box: dimension "
                    f"{len(cb.predicted)}, {'agrees' if cb.matches_prediction else 'DISAGREES'}")
    text += [f"warning (BoxTooSmall): {w}" for w in cb.warnings]
    ok = all(cb.verified) and cb.matches_prediction is not False
    return Report("center", doc.name, _ok(ok), result, text)


def cmd_support(doc: Document, opts: dict) -> Report:
    sup = support_report(doc.cocycle)
    names = doc.lie.names if doc.lie else None
    result = sup.as_dict(doc.group, names)
    result["invariant_factors"] = sup.torus.factors if sup.torus else []
    text = [f"support H has dimension {sup.dim_h} in G of dimension {sup.dim_g}"]
    if sup.torus is not None:
        t = sup.torus
        text.append(f"torus commutation lattice Γ = {_lattice_str(t.gamma, doc.group.k)}; "
                    f"invariant factors of Z^{t.k}/Γ: {t.factors}")
    text.append(f"characters trivial on H: {_lattice_str(sup.gamma, doc.group.k)} (rank {sup.gamma_rank})")
    text.append(f"unipotent part: dim V = {sup.dim_v}")
    if sup.unipotent is not None:
        u = sup.unipotent.as_dict(names)
        text.append(f"span of r: {{{', '.join(u['basis'])}}} (dimension {u['dim_V']}, "
                    f"{'even' if u['even'] else 'ODD'})")
    text.append("J is minimal (supported on G)" if sup.full else "J is not minimal")
    return Report("support", doc.name, "ok", result, text)


def _lattice_str(gamma, k) -> str:
    if not gamma:
        return "0"
    return "span{" + ", ".join("(" + ", ".join(map(str, v)) + ")" for v in gamma) + "}"


def cmd_simple(doc: Document, opts: dict) -> Report:
    alg, cb = _center(doc, opts)
    rep = simplicity_verdict(alg, center=cb)
    result = {"verdict": rep.simple, "gamma_rank": rep.gamma_rank, "dimV": rep.dim_v,
              "center_box": rep.center_box, "justification": rep.justification}
    text = [f"verdict: {rep.simple}"] + [f"- {j}" for j in rep.justification]
    return Report("simple", doc.name, "ok", result, text)


def cmd_structure(doc: Document, opts: dict) -> Report:
    alg, cb = _center(doc, opts)
    rep = structure_report(alg, cb)
    result = rep.as_dict()
    text = [f"{rep.verdict}: {rep.model}", f"simple: {rep.simple}"]
    text += [f"- {j}" for j in rep.justification]
    return Report("structure", doc.name, "ok", result, text)


_WEDGE = re.compile(r"^\s*(?:(.*?)\s*\*\s*)?([A-Za-z_][A-Za-z_0-9']*)\s*(?:∧|\^|/\\)\s*([A-Za-z_][A-Za-z_0-9']*)\s*$")


def parse_bivector(doc: Document, text: str) -> Bivector:
    """``"X∧Y - 2*X∧Z"`` on the document's Lie algebra."""
    if doc.lie is None:
        raise SchemaError("the document has no lie section", "bivector")
    terms = []
    chunks = re.split(r"\s+(?=[+-])|^(?=[+-])", text.strip())
    for chunk in (c for c in chunks if c and c.strip()):
        sign = 1
        body = chunk.strip()
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:].strip()
        m = _WEDGE.match(body)
        if m is None:
            raise ExprSyntaxError(f"cannot read wedge term {chunk.strip()!r}", "bivector")
        coef = parse_scalar(m.group(1), doc.params, "bivector") if m.group(1) else 1
        for n in (m.group(2), m.group(3)):
            if n not in doc.lie.names:
                raise UnknownName(f"unknown basis vector {n!r}", "bivector")
        terms.append((sign * coef, m.group(2), m.group(3)))
    return Bivector.wedge(doc.lie, terms)


def cmd_check(doc: Document, opts: dict) -> Report:
    what = opts["what"]
    if what == "hopf":
        rep = validate_hopf(doc.group)
        text = [f"Hopf axioms: {'pass' if rep.ok else 'FAIL'}"]
        text += [f"{a} violated at {w}: {d}" for a, w, d in rep.failures]
        return Report("check hopf", doc.name, _ok(rep.ok), rep.as_dict(), text)
    if what == "cybe":
        if opts.get("bivector"):
            r = parse_bivector(doc, opts["bivector"])
        else:
            r = doc.bivector()
            if r is None:
                raise SchemaError("no bivector: pass --r or use an exp-bivector cocycle", "cocycle")
        ok, viol = cybe_check(r)
        result = {"r": str(r), "satisfies_cybe": ok, "violation": {k: str(v) for k, v in viol.items()}}
        text = [f"r = {r}", f"CYBE: {'holds' if ok else 'FAILS'}"]
        text += [f"  coefficient of {k}: {v}" for k, v in result["violation"].items()]
        if doc.split is not None:
            try:
                dec = prop54_decompose(r, *doc.split)
            except (NotBlockDecomposable, CentralizerViolation) as exc:
                result["decomposition"] = {"error": str(exc)}
                text.append(f"torus/unipotent decomposition unavailable: {exc}")
            else:
                result["decomposition"] = {
                    "s": str(dec.s), "w": dec.w_str(), "r_u": str(dec.r_u),
                    "centralizer_conditions": [{"torus": t, "passes": p} for t, p in dec.conditions],
                    "reassembles": dec.reassemble().matrix == r.matrix}
                text.append(f"decomposition: s = {dec.s}, w = {dec.w_str()}, r_u = {dec.r_u}")
                text.append("centralizer conditions: " + ("all pass" if dec.all_pass else "FAIL"))
                ok = ok and dec.all_pass
        return Report("check cybe", doc.name, _ok(ok), result, text)
    if what == "cocycle":
        d = opts.get("degree")
        if d is None:
            d = DEFAULT_DEGREE
        box = opts.get("box")
        if box is None:
            box = DEFAULT_CHECK_BOX
        J = doc.cocycle
        ax = cocycle_axiom_check(J, d, box)
        inv = check_inverse(J, min(d, 3), box)
        viol = [{"kind": k, "witness": w, "lhs": a, "rhs": b} for k, w, a, b in ax.violations + inv.violations]
        result = {"degree": d, "box": box, "axiom_checked": ax.checked, "inverse_checked": inv.checked,
                  "ok": ax.ok and inv.ok, "violations": viol}
        text = [f"cocycle identity and normalization on degree ≤ {d}, torus box [-{box}, {box}]: "
                f"{'pass' if ax.ok else 'FAIL'} ({ax.checked} checks)",
                f"J^(-1) * J = eps⊗eps on degree ≤ {min(d, 3)} pairs: "
                f"{'pass' if inv.ok else 'FAIL'} ({inv.checked} checks)"]
        text += [f"  {v['kind']} at {v['witness']}: {v['lhs']} ≠ {v['rhs']}" for v in viol]
        return Report("check cocycle", doc.name, _ok(ax.ok and inv.ok), result, text)
    if what == "invariance":
        rows = []
        for D in doc.derivations:
            rows.append({"name": D.name, "kind": D.kind, "failures": left_invariance_failures(D),
                         "tag_ok": D.check_tag()})
        ok = all(not r["failures"] and r["tag_ok"] for r in rows)
        text = [f"{r['name']}: " + ("left-invariant" if not r["failures"] else
                                   "fails on " + ", ".join(r["failures"]))
                + ("" if r["tag_ok"] else f", does not match tag {r['kind']}") for r in rows]
        return Report("check invariance", doc.name, _ok(ok), {"derivations": rows},
                      text or ["(no derivations in the document)"])
    raise SchemaError(f"unknown check {what!r}", "check")


def cmd_values(doc: Document, opts: dict) -> Report:
    """J, J^-1, Q and R^J on a pair of elements."""
    f = doc.parse_element(opts["left"], "left operand")
    g = doc.parse_element(opts["right"], "right operand")
    J = doc.cocycle
    vals = {"J": eval_J(J, f, g), "J^-1": eval_Jinv(J, f, g), "Q": eval_Q(J, f, g),
            "R^J": eval_RJ(J, f, g)}
    result = {k: str(v) for k, v in vals.items()}
    text = [f"{k}({f}, {g}) = {format_scalar(v)}" for k, v in vals.items()]
    return Report("values", doc.name, "ok", result, text)


COMMANDS = {
    "validate": cmd_validate,
    "present": cmd_present,
    "multiply": cmd_multiply,
    "normal-form": cmd_normal_form,
    "center": cmd_center,
    "support": cmd_support,
    "simple": cmd_simple,
    "structure": cmd_structure,
    "check": cmd_check,
    "values": cmd_values,
}


def run_command(cmd: str, doc: Document, **opts) -> Report:
    try:
        return COMMANDS[cmd](doc, opts)
    except ModeUnsupported as exc:
        return Report(cmd, doc.name, "ok", {"verdict": "undetermined", "reason": str(exc)},
                      [f"undetermined: {exc}"])


def example_report(name: str) -> str:
    return serialize(builtin(name))
