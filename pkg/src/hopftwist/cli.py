"""Command-line interface: ``hopftwist <subcommand> <document> ...``."""

from __future__ import annotations

import argparse
import os
import sys

from .builtins import builtin_names, builtin_raw
from .commands import emit_report, example_report, run_command
from .documents import build, parse_document
from .expr import ExprError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _add_doc(p: argparse.ArgumentParser) -> None:
    p.add_argument("document", help="path to a JSON document, '-' for stdin, or a built-in example name")


def _add_bounds(p: argparse.ArgumentParser, box_default: str) -> None:
    p.add_argument("--degree", type=int, default=None, help="filtered degree bound (default 4)")
    p.add_argument("--box", type=int, default=None, help=f"torus exponent bound (default {box_default})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopftwist", description="Twisted function algebras of algebraic groups.")
    ap.add_argument("--format", choices=["text", "machine"], default="text", help="output format")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, hlp in (("validate", "check the document: Hopf axioms, Lie data, derivations"),
                      ("present", "derive the commutation relations of O(G)_J"),
                      ("support", "support of J: torus lattice and unipotent span"),):
        _add_doc(sub.add_parser(name, help=hlp))
    p = sub.add_parser("multiply", help="twisted product of two elements")
    _add_doc(p)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--product", choices=["right", "left", "hopf"], default="right")
    p = sub.add_parser("values", help="J, J^-1, Q and R^J on two elements")
    _add_doc(p)
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("normal-form", help="normal form of a word in the generators")
    _add_doc(p)
    p.add_argument("word", help="letters separated by '·' or '*', e.g. 'y·x' or 'x^-1*z'")
    for name, hlp in (("center", "center of O(G)_J within a degree box"),
                      ("simple", "simplicity verdict"),
                      ("structure", "isomorphism type of O(G)_J")):
        p = sub.add_parser(name, help=hlp)
        _add_doc(p)
        _add_bounds(p, "4")
    p = sub.add_parser("check", help="run one verification suite")
    p.add_argument("what", choices=["hopf", "cybe", "cocycle", "invariance"])
    _add_doc(p)
    _add_bounds(p, "1")
    p.add_argument("--r", dest="bivector", default=None,
                   help="bivector for the cybe check, e.g. 'X∧Y - 2*X∧Z' (default: the cocycle's r)")
    p = sub.add_parser("example", help="print a built-in example document")
    p.add_argument("name", choices=builtin_names() + ["heisenberg-corrupted"])
    return ap


def load_document(ref: str):
    if ref == "-":
        return parse_document(sys.stdin.read())
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return parse_document(fh.read())
    if ref in builtin_names() or ref == "heisenberg-corrupted":
        return build(builtin_raw(ref))
    raise FileNotFoundError(f"no such document or built-in example: {ref}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout.buffer
    if args.command == "example":
        out.write(example_report(args.name).encode())
        out.flush()
        return EXIT_OK
    try:
        doc = load_document(args.document)
        opts = {k: v for k, v in vars(args).items() if k not in ("command", "document", "format")}
        rep = run_command(args.command, doc, **opts)
    except ExprError as exc:
        sys.stderr.write(f"error: {getattr(exc, 'kind', 'InputError')}: {exc}\n")
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(emit_report(rep, args.format))
    out.flush()
    return rep.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
