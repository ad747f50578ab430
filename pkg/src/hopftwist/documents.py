"""JSON input documents: schema, parsing into engine objects, serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import jsonschema

from .cocycle import (
    Bicharacter,
    Cocycle,
    Convolution,
    ExpBivector,
    ExplicitSeries,
    InvalidCocycle,
    SeriesOperator,
    Trivial,
)
from .expr import ExprError, ExprSyntaxError, UnknownName, parse_expr, scalar_namespace
from .hopfmodel import Element, GroupData, lin_add
from .liecore import Bivector, Derivation, LieAlgebra
from .scalars import ParamTable, Scalar

SCHEMA_VERSION = 1


class SchemaError(ExprError):
    kind = "SchemaError"


_NAME = {"type": "string", "pattern": "^[A-Za-z_][A-Za-z_0-9']*$"}
_EXPR = {"type": "string", "minLength": 1}

_COCYCLE = {
    "type": "object",
    "required": ["variant"],
    "properties": {
        "variant": {"enum": ["trivial", "bicharacter", "exp-bivector", "series", "convolution"]},
        "matrix": {"type": "array", "items": {"type": "array", "items": _EXPR}},
        "r": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3,
                                         "items": {"type": "string"}}},
        "multiplier": _EXPR,
        "coefficient": _EXPR,
        "left": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "string"}},
        "right": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "string"}},
        "termination": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "string"}},
        "parts": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/cocycle"}},
    },
    "additionalProperties": False,
}

SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "cocycle"],
    "$defs": {"cocycle": _COCYCLE},
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "description": {"type": "string"},
        "params": {
            "type": "object",
            "properties": {
                "generic": {"type": "array", "items": _NAME},
                "cyclotomic_order": {"type": ["integer", "null"], "minimum": 1},
            },
            "additionalProperties": False,
        },
        "group": {
            "type": "object",
            "required": ["torus", "filtered"],
            "properties": {
                "mode": {"enum": ["strict", "extended"]},
                "torus": {"type": "array", "items": _NAME},
                "filtered": {"type": "array", "items": _NAME},
                "coproduct": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "array",
                        "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _EXPR},
                    },
                },
                "degrees": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
            },
            "additionalProperties": False,
        },
        "lie": {
            "type": "object",
            "required": ["basis"],
            "properties": {
                "basis": {"type": "array", "items": _NAME},
                "brackets": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3,
                                                        "items": {"type": "string"}}},
                "realization": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "object",
                        "required": ["kind", "action"],
                        "properties": {
                            "kind": {"enum": ["toral", "nilpotent"]},
                            "action": {"type": "object", "additionalProperties": _EXPR},
                            "witness": {"type": "object", "additionalProperties": {"type": "integer"}},
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        },
        "cocycle": {"$ref": "#/$defs/cocycle"},
        "split": {
            "type": "object",
            "required": ["torus", "unipotent"],
            "properties": {"torus": {"type": "array", "items": _NAME},
                           "unipotent": {"type": "array", "items": _NAME}},
            "additionalProperties": False,
        },
        "options": {
            "type": "object",
            "properties": {"degree": {"type": "integer", "minimum": 0},
                           "box": {"type": "integer", "minimum": 0}},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


@dataclass
class Document:
    raw: dict
    params: ParamTable
    group: GroupData
    lie: LieAlgebra | None
    derivations: list
    cocycle: Cocycle
    split: tuple | None = None
    options: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.raw.get("name", "document")

    def element_namespace(self):
        return element_namespace(self.group, self.params)

    def parse_element(self, text: str, where: str = "expression") -> Element:
        resolve, call = self.element_namespace()
        v = parse_expr(text, resolve, call, where)
        return v if isinstance(v, Element) else self.group.constant(v)

    def bivector(self) -> Bivector | None:
        J = self.cocycle
        return J.r if isinstance(J, ExpBivector) else None


def element_namespace(group: GroupData, params: ParamTable):
    sres, call = scalar_namespace(params.generic_params, params.cyclotomic_order)
    names = group.torus + group.filtered

    def resolve(name: str):
        if name in names:
            return group.var(name)
        return sres(name)

    return resolve, call


def parse_scalar(text: str, params: ParamTable, where: str) -> Scalar:
    resolve, call = scalar_namespace(params.generic_params, params.cyclotomic_order)
    v = parse_expr(text, resolve, call, where)
    try:
        return Scalar.coerce(v)
    except TypeError:
        raise SchemaError("expected a scalar", where) from None


def _element(text: str, group: GroupData, params: ParamTable, where: str) -> Element:
    resolve, call = element_namespace(group, params)
    v = parse_expr(text, resolve, call, where)
    return v if isinstance(v, Element) else group.constant(v)


def _linear(text: str, basis: list[str], params: ParamTable, where: str) -> dict:
    """Parse a linear combination of Lie basis names."""
    tmp = GroupData([], basis)
    e = _element(text, tmp, params, where)
    out = {}
    for m, c in e.terms.items():
        if sum(m[1]) != 1:
            raise SchemaError("expected a linear combination of basis vectors", where)
        out[basis[m[1].index(1)]] = c
    return out


def _check_names(seq, where):
    if len(set(seq)) != len(seq):
        raise SchemaError("names must be unique", where)


def build(raw: dict) -> Document:
    """Validate a decoded JSON object and build the engine objects."""
    try:
        jsonschema.validate(raw, SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(exc.message, path) from None
    pr = raw.get("params", {})
    params = ParamTable(list(pr.get("generic", [])), pr.get("cyclotomic_order"))
    _check_names(params.generic_params, "params/generic")

    gr = raw["group"]
    torus, filtered = list(gr["torus"]), list(gr["filtered"])
    _check_names(torus + filtered + params.generic_params + ["zeta", "exp"], "group")
    tmp = GroupData(torus, filtered, mode=gr.get("mode", "strict"))
    zs = []
    cop = gr.get("coproduct", {})
    for v in cop:
        if v not in filtered:
            raise UnknownName(f"coproduct given for undeclared filtered variable {v!r}",
                              f"group/coproduct/{v}")
    for name in filtered:
        d: dict = {}
        for n, (ls, rs) in enumerate(cop.get(name, [])):
            where = f"group/coproduct/{name}/{n}"
            le = _element(ls, tmp, params, where)
            re_ = _element(rs, tmp, params, where)
            for m1, c1 in le.terms.items():
                for m2, c2 in re_.terms.items():
                    lin_add(d, (m1, m2), c1 * c2)
        zs.append(d)
    degs = gr.get("degrees")
    degrees = None
    if degs:
        for v in degs:
            if v not in filtered:
                raise UnknownName(f"degree given for undeclared variable {v!r}", "group/degrees")
        degrees = [degs.get(v, 1) for v in filtered]
    group = GroupData(torus, filtered, zs, mode=gr.get("mode", "strict"), filtration_degrees=degrees)

    lie = None
    derivations: list = []
    if "lie" in raw:
        lr = raw["lie"]
        basis = list(lr["basis"])
        _check_names(basis, "lie/basis")
        brackets = {}
        for n, (a, b, expr) in enumerate(lr.get("brackets", [])):
            where = f"lie/brackets/{n}"
            for x in (a, b):
                if x not in basis:
                    raise UnknownName(f"unknown basis vector {x!r}", where)
            brackets[(a, b)] = _linear(expr, basis, params, where)
        lie = LieAlgebra(basis, brackets)
        real = lr.get("realization")
        if real is not None:
            for v in real:
                if v not in basis:
                    raise UnknownName(f"realization for unknown basis vector {v!r}", "lie/realization")
            for b in basis:
                if b not in real:
                    raise SchemaError(f"missing realization for {b!r}", "lie/realization")
                entry = real[b]
                action = {}
                for var, expr in entry["action"].items():
                    where = f"lie/realization/{b}/action/{var}"
                    if var not in torus + filtered:
                        raise UnknownName(f"unknown variable {var!r}", where)
                    action[var] = _element(expr, group, params, where)
                witness = dict(entry["witness"]) if "witness" in entry else None
                if witness is not None:
                    for var in torus + filtered:
                        witness.setdefault(var, 0)
                derivations.append(Derivation(group, action, entry["kind"], witness, name=b))

    cocycle = _build_cocycle(raw["cocycle"], "cocycle", group, params, lie, derivations)

    split = None
    if "split" in raw:
        if lie is None:
            raise SchemaError("split needs a lie section", "split")
        for v in raw["split"]["torus"] + raw["split"]["unipotent"]:
            if v not in lie.names:
                raise UnknownName(f"unknown basis vector {v!r}", "split")
        split = (list(raw["split"]["torus"]), list(raw["split"]["unipotent"]))
    return Document(raw, params, group, lie, derivations, cocycle, split, dict(raw.get("options", {})))


def _build_cocycle(c: dict, where: str, group, params, lie, derivations) -> Cocycle:
    v = c["variant"]

    def need(key):
        if key not in c:
            raise SchemaError(f"variant {v!r} needs {key!r}", where)
        return c[key]

    try:
        if v == "trivial":
            return Trivial(group)
        if v == "bicharacter":
            mat = need("matrix")
            rows = [[parse_scalar(e, params, f"{where}/matrix/{i}/{j}") for j, e in enumerate(row)]
                    for i, row in enumerate(mat)]
            return Bicharacter(group, rows)
        if lie is None or not derivations:
            if v in ("exp-bivector", "series"):
                raise SchemaError(f"variant {v!r} needs a lie section with a realization", where)
        if v == "exp-bivector":
            terms = []
            for n, (a, b, e) in enumerate(need("r")):
                w = f"{where}/r/{n}"
                for x in (a, b):
                    if x not in lie.names:
                        raise UnknownName(f"unknown basis vector {x!r}", w)
                terms.append((parse_scalar(e, params, w), a, b))
            r = Bivector.wedge(lie, terms)
            mult = parse_scalar(c.get("multiplier", "1"), params, f"{where}/multiplier")
            return ExpBivector(group, lie, derivations, r, mult)
        if v == "series":
            ops = []
            for side in ("left", "right"):
                kind, name = need(side)
                if kind not in ("power", "falling"):
                    raise SchemaError(f"unknown operator kind {kind!r}", f"{where}/{side}")
                if name not in lie.names:
                    raise UnknownName(f"unknown basis vector {name!r}", f"{where}/{side}")
                ops.append(SeriesOperator(kind, derivations[lie.index(name)]))
            side, var = need("termination")
            base = parse_scalar(need("coefficient"), params, f"{where}/coefficient")
            return ExplicitSeries(group, base, ops[0], ops[1], (side, var))
        if v == "convolution":
            parts = [_build_cocycle(p, f"{where}/parts/{i}", group, params, lie, derivations)
                     for i, p in enumerate(need("parts"))]
            return Convolution(parts)
    except InvalidCocycle as exc:
        raise SchemaError(str(exc), where) from None
    raise SchemaError(f"unknown variant {v!r}", where)  # pragma: no cover - schema enum


def parse_document(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExprSyntaxError(exc.msg, f"line {exc.lineno}", exc.colno) from None
    if not isinstance(raw, dict):
        raise SchemaError("document must be a JSON object", "<root>")
    return build(raw)


def serialize(doc: Document | dict) -> str:
    raw = doc.raw if isinstance(doc, Document) else doc
    return json.dumps(raw, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


__all__ = [
    "Document",
    "ExprSyntaxError",
    "SchemaError",
    "UnknownName",
    "build",
    "parse_document",
    "serialize",
]
