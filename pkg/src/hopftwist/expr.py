"""Compact expression grammar used inside input documents.

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" exponent)?
    exponent:= INT | "-" INT | "(" expr ")"
    atom    := INT | NAME | NAME "(" expr ")" | "(" expr ")"

Names are resolved by a caller-supplied namespace.  ``exp(...)`` takes a
rational linear form in generic parameters and ``zeta`` is the declared
root of unity.  ``q^1/2`` is rejected: the exponent must be parenthesised.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .scalars import Scalar


class ExprError(ValueError):
    """Base for document diagnostics; carries a location string."""

    def __init__(self, message: str, where: str = "", column: int | None = None):
        self.message = message
        self.where = where
        self.column = column
        loc = where
        if column is not None:
            loc = f"{where}, column {column}" if where else f"column {column}"
        super().__init__(f"{loc}: {message}" if loc else message)


class ExprSyntaxError(ExprError):
    kind = "SyntaxError"


class UnknownName(ExprError):
    kind = "UnknownName"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\S))")


@dataclass
class Token:
    kind: str  # int, name, op, end
    text: str
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches non-space
            raise ExprSyntaxError("unexpected input", column=pos + 1)
        if m.group(1):
            out.append(Token("int", m.group(1), m.start(1) + 1))
        elif m.group(2):
            out.append(Token("name", m.group(2), m.start(2) + 1))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()·":
                raise ExprSyntaxError(f"unexpected character {ch!r}", column=m.start(3) + 1)
            out.append(Token("op", "*" if ch == "·" else ch, m.start(3) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


class Parser:
    """Recursive-descent evaluator.

    ``resolve(name)`` returns the value bound to a name (or raises KeyError);
    ``call(name, arg)`` handles function-style atoms such as ``exp(...)``.
    Values only need ``+``, ``-``, ``*`` and integer powers.
    """

    def __init__(self, text: str, resolve: Callable, call: Callable | None = None, where: str = ""):
        self.text = text
        self.toks = tokenize(text) if text.strip() else None
        self.i = 0
        self.resolve = resolve
        self.call = call
        self.where = where

    def err(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ExprSyntaxError(msg, self.where, tok.col)

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        t = self.take()
        if t.text != text:
            self.err(f"expected {text!r}", t)

    def parse(self):
        if self.toks is None:
            raise ExprSyntaxError("empty expression", self.where, 1)
        v = self.expr()
        if self.peek().kind != "end":
            self.err(f"unexpected {self.peek().text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.take()
            w = self.unary()
            if op.text == "*":
                v = v * w
            else:
                try:
                    w = Scalar.coerce(w)
                except TypeError:
                    self.err("only scalars may appear in a denominator", op)
                if not w:
                    self.err("division by zero", op)
                v = v * w.inverse()
        return v

    def unary(self):
        if self.peek().text == "-":
            self.take()
            return -self.unary()
        if self.peek().text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().text != "^":
            return base
        caret = self.take()
        t = self.peek()
        if t.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            try:
                q = Scalar.coerce(e).to_fraction()
            except (TypeError, ValueError):
                self.err("exponent must be a rational number", t)
        else:
            sign = 1
            if t.text == "-":
                self.take()
                sign = -1
                t = self.peek()
            if t.kind != "int":
                self.err("expected an integer exponent", t)
            self.take()
            q = Fraction(sign * int(t.text))
            if self.peek().text == "/":
                self.err("ambiguous exponent: write fractional exponents in parentheses, "
                         "e.g. q^(1/2)", caret)
        return self._raise(base, q, caret)

    def _raise(self, base, q: Fraction, tok: Token):
        if q.denominator == 1:
            n = int(q)
            if n < 0:
                try:
                    return base ** n
                except (ValueError, ZeroDivisionError) as exc:
                    self.err(str(exc), tok)
            return base ** n
        # fractional powers only for exponential units
        try:
            s = Scalar.coerce(base)
            u = s.to_expunit()
        except (TypeError, ValueError):
            self.err("fractional powers are only defined for exp(...) units", tok)
        if u.order is not None:
            self.err("fractional powers of roots of unity are ambiguous", tok)
        return Scalar.exp({k: v * q for k, v in u.exponent})

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return Scalar.coerce(int(t.text))
        if t.text == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t.kind == "name":
            if self.peek().text == "(" and self.call is not None:
                self.take()
                arg = self.expr()
                self.expect(")")
                try:
                    return self.call(t.text, arg)
                except KeyError:
                    raise UnknownName(f"unknown function {t.text!r}", self.where, t.col) from None
                except (TypeError, ValueError) as exc:
                    raise ExprSyntaxError(str(exc), self.where, t.col) from None
            try:
                return self.resolve(t.text)
            except KeyError:
                raise UnknownName(f"unknown name {t.text!r}", self.where, t.col) from None
        if t.kind == "end":
            self.err("unexpected end of expression", t)
        self.err(f"unexpected {t.text!r}", t)


def parse_expr(text: str, resolve: Callable, call: Callable | None = None, where: str = ""):
    return Parser(text, resolve, call, where).parse()


def scalar_namespace(params: list[str], cyclotomic_order: int | None):
    """(resolve, call) for scalar-valued expressions."""

    def resolve(name: str):
        if name in params:
            return Scalar.param(name)
        if name == "zeta" and cyclotomic_order:
            return Scalar.zeta(cyclotomic_order)
        raise KeyError(name)

    def call(name: str, arg):
        if name != "exp":
            raise KeyError(name)
        s = Scalar.coerce(arg)
        form = s.linear_form()
        for k in form:
            if k and k not in params:
                raise ValueError(f"exp of undeclared symbol {k!r}")
        return Scalar.exp(form)

    return resolve, call
