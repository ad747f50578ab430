"""Built-in example documents."""

from __future__ import annotations

import copy

from .documents import SCHEMA_VERSION, Document, build

_BUILTINS: dict[str, dict] = {
    "quantum-torus": {
        "schema_version": SCHEMA_VERSION,
        "name": "quantum-torus",
        "description": "Two-dimensional torus twisted by exp(t delta^mu); x*y = exp(2t) y*x.",
        "params": {"generic": ["t"]},
        "group": {"mode": "strict", "torus": ["x", "y"], "filtered": []},
        "lie": {
            "basis": ["delta", "mu"],
            "brackets": [],
            "realization": {
                "delta": {"kind": "toral", "action": {"x": "x"}},
                "mu": {"kind": "toral", "action": {"y": "y"}},
            },
        },
        "cocycle": {"variant": "exp-bivector", "r": [["delta", "mu", "t"]], "multiplier": "1"},
        "split": {"torus": ["delta", "mu"], "unipotent": []},
    },
    "quantum-torus-cyclotomic": {
        "schema_version": SCHEMA_VERSION,
        "name": "quantum-torus-cyclotomic",
        "description": "Two-dimensional torus with a bicharacter cocycle valued in 6th roots of unity.",
        "params": {"generic": [], "cyclotomic_order": 6},
        "group": {"mode": "strict", "torus": ["x", "y"], "filtered": []},
        "cocycle": {"variant": "bicharacter", "matrix": [["1", "zeta"], ["zeta^-1", "1"]]},
    },
    "moyal": {
        "schema_version": SCHEMA_VERSION,
        "name": "moyal",
        "description": "Additive group of the plane twisted by exp(Dx^Dy / 2): the Weyl algebra.",
        "params": {"generic": []},
        "group": {"mode": "strict", "torus": [], "filtered": ["y", "x"]},
        "lie": {
            "basis": ["Dx", "Dy"],
            "brackets": [],
            "realization": {
                "Dx": {"kind": "nilpotent", "action": {"x": "1"}},
                "Dy": {"kind": "nilpotent", "action": {"y": "1"}},
            },
        },
        "cocycle": {"variant": "exp-bivector", "r": [["Dx", "Dy", "1"]], "multiplier": "1/2"},
        "split": {"torus": [], "unipotent": ["Dx", "Dy"]},
    },
    "heisenberg": {
        "schema_version": SCHEMA_VERSION,
        "name": "heisenberg",
        "description": "Heisenberg group with Delta z = z(x)1 + 1(x)z + x(x)y, twisted along Z^Y.",
        "params": {"generic": []},
        "group": {
            "mode": "strict",
            "torus": [],
            "filtered": ["x", "y", "z"],
            "coproduct": {"z": [["x", "y"]]},
        },
        "lie": {
            "basis": ["X", "Y", "Z"],
            "brackets": [["X", "Y", "Z"]],
            "realization": {
                "X": {"kind": "nilpotent", "action": {"x": "1"}},
                "Y": {"kind": "nilpotent", "action": {"y": "1", "z": "x"}},
                "Z": {"kind": "nilpotent", "action": {"z": "1"}},
            },
        },
        "cocycle": {"variant": "exp-bivector", "r": [["Z", "Y", "1"]], "multiplier": "1/2"},
        "split": {"torus": [], "unipotent": ["X", "Y", "Z"]},
    },
    "mixed-nilpotent": {
        "schema_version": SCHEMA_VERSION,
        "name": "mixed-nilpotent",
        "description": "Torus x, y times the additive line z, twisted by h X^Y + X^Z.",
        "params": {"generic": ["h"]},
        "group": {"mode": "strict", "torus": ["x", "y"], "filtered": ["z"]},
        "lie": {
            "basis": ["X", "Y", "Z"],
            "brackets": [],
            "realization": {
                "X": {"kind": "toral", "action": {"x": "x"}},
                "Y": {"kind": "toral", "action": {"y": "y"}},
                "Z": {"kind": "nilpotent", "action": {"z": "1"}},
            },
        },
        "cocycle": {
            "variant": "exp-bivector",
            "r": [["X", "Y", "h"], ["X", "Z", "1"]],
            "multiplier": "1/2",
        },
        "split": {"torus": ["X", "Y"], "unipotent": ["Z"]},
    },
    "borel": {
        "schema_version": SCHEMA_VERSION,
        "name": "borel",
        "description": "Borel subgroup of SL2 (co-opposite coproduct) twisted by the Jordanian series.",
        "params": {"generic": ["h"]},
        "group": {
            "mode": "extended",
            "torus": ["x"],
            "filtered": ["y"],
            "coproduct": {"y": [["y", "x - 1"]]},
        },
        "lie": {
            "basis": ["X", "Y"],
            "brackets": [["X", "Y", "-Y"]],
            "realization": {
                "X": {"kind": "toral", "action": {"x": "x", "y": "y"}},
                "Y": {"kind": "nilpotent", "action": {"y": "1"}},
            },
        },
        "cocycle": {
            "variant": "series",
            "coefficient": "h",
            "left": ["falling", "X"],
            "right": ["power", "Y"],
            "termination": ["right", "y"],
        },
    },
}

# A deliberately broken Heisenberg document: Delta z gains an x(x)1 term,
# which breaks the counit axiom.
_CORRUPTED = copy.deepcopy(_BUILTINS["heisenberg"])
_CORRUPTED["name"] = "heisenberg-corrupted"
_CORRUPTED["description"] = "Heisenberg data with the correction x(x)y replaced by x(x)1."
_CORRUPTED["group"]["coproduct"] = {"z": [["x", "1"]]}
_CORRUPTED["group"]["degrees"] = {"x": 1, "y": 1, "z": 2}


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def builtin_raw(name: str) -> dict:
    if name == "heisenberg-corrupted":
        return copy.deepcopy(_CORRUPTED)
    if name not in _BUILTINS:
        raise KeyError(f"unknown example {name!r}; available: {', '.join(builtin_names())}")
    return copy.deepcopy(_BUILTINS[name])


def builtin(name: str) -> Document:
    return build(builtin_raw(name))
