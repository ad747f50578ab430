"""Coordinate Hopf algebras O(G) = O(T) (x) O(U).

Torus variables ``x_1..x_k`` are grouplike Laurent variables.  Filtered
variables ``z_1..z_m`` have coproducts

    Delta(z_j) = z_j (x) 1 + 1 (x) z_j + Z_j

where ``Z_j`` only involves earlier filtered variables (strict mode) or may
also involve torus variables and, linearly in one leg, z_j itself (extended
mode, which covers the Borel subgroup of SL_2).

A monomial ``x^alpha z^beta`` is the pair ``(alpha, beta)`` of integer tuples.
Elements, tensors and n-fold tensors are dictionaries from monomials
(resp. tuples of monomials) to :class:`~hopftwist.scalars.Scalar`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .scalars import ONE, ZERO, Scalar

Mono = tuple  # (alpha: tuple[int, ...], beta: tuple[int, ...])


class FiltrationViolation(ValueError):
    pass


def mono_mul(a: Mono, b: Mono) -> Mono:
    return (
        tuple(i + j for i, j in zip(a[0], b[0])),
        tuple(i + j for i, j in zip(a[1], b[1])),
    )


def mono_sort_key(m: Mono):
    """Graded-lex on the torus part, then graded-lex on the filtered part."""
    alpha, beta = m
    return (sum(abs(a) for a in alpha), alpha, sum(beta), beta)


# ----------------------------------------------------------------------------
# dictionary-level linear algebra
# ----------------------------------------------------------------------------


def lin_add(out: dict, key, coeff: Scalar) -> None:
    """In-place ``out[key] += coeff`` dropping zeros."""
    if not coeff:
        return
    cur = out.get(key)
    if cur is None:
        out[key] = coeff
    else:
        s = cur + coeff
        if s:
            out[key] = s
        else:
            del out[key]


def lin_combine(terms: Iterable[tuple]) -> dict:
    out: dict = {}
    for key, c in terms:
        lin_add(out, key, c)
    return out


def lin_scale(d: Mapping, c: Scalar) -> dict:
    if not c:
        return {}
    if c.is_one():
        return dict(d)
    return {k: v * c for k, v in d.items()}


# ----------------------------------------------------------------------------
# Element
# ----------------------------------------------------------------------------


class Element:
    """A Scalar-linear combination of monomials of O(G), in canonical form."""

    __slots__ = ("group", "terms")

    def __init__(self, group: "GroupData", terms: Mapping | None = None):
        self.group = group
        self.terms = {k: Scalar.coerce(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def _wrap(cls, group, terms: dict) -> "Element":
        e = object.__new__(cls)
        e.group = group
        e.terms = terms
        return e

    def _other(self, o) -> "Element":
        if isinstance(o, Element):
            return o
        return self.group.constant(o)

    def __add__(self, o):
        o = self._other(o)
        out = dict(self.terms)
        for k, v in o.terms.items():
            lin_add(out, k, v)
        return Element._wrap(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._wrap(self.group, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._other(o))

    def __rsub__(self, o):
        return self._other(o) - self

    def __mul__(self, o):
        if isinstance(o, Element):
            return commutative_product(self, o)
        return Element._wrap(self.group, lin_scale(self.terms, Scalar.coerce(o)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (m, c), = self.terms.items()
            if any(m[1]):
                raise ValueError("filtered variables are not invertible")
            inv = (tuple(-a for a in m[0]), m[1])
            return Element._wrap(self.group, {inv: c.inverse() ** (-n)})
        out = self.group.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, Element):
            return self.terms == o.terms
        try:
            return self.terms == self.group.constant(o).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: mono_sort_key(kv[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(m[1]) for m in self.terms), default=0)

    def __str__(self):
        return format_linear(self.sorted_terms(), self.group.mono_str)

    def __repr__(self):
        return f"Element({self})"


def format_linear(items: Sequence[tuple], mono_str) -> str:
    """Render ``sum c * m`` with rational coefficients inline and others bracketed."""
    if not items:
        return "0"
    parts = []
    for m, c in items:
        ms = mono_str(m)
        if ms == "1":
            parts.append(str(c) if c.is_rational() else f"({c})" if len(c._num) > 1 or c._den else str(c))
            continue
        if c.is_one():
            parts.append(ms)
        elif c == -1:
            parts.append("-" + ms)
        elif c.is_unit_term() and len(str(c).split(" ")) == 1:
            parts.append(f"{c}*{ms}")
        else:
            parts.append(f"({c})*{ms}")
    return " + ".join(parts).replace("+ -", "- ")


# ----------------------------------------------------------------------------
# GroupData
# ----------------------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    failures: list = field(default_factory=list)  # (axiom, witness, detail)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [
                {"axiom": a, "witness": w, "detail": d} for a, w, d in self.failures
            ],
        }


class GroupData:
    """O(G) with torus variables and filtered variables.

    ``coproduct_terms[j]`` is Z_j, given as a list of ``(coeff, left, right)``
    with ``left``/``right`` monomials, or as a mapping ``(left, right) -> coeff``.
    """

    def __init__(
        self,
        torus: Sequence[str],
        filtered: Sequence[str],
        coproduct_terms: Sequence | None = None,
        mode: str = "strict",
        filtration_degrees: Sequence[int] | None = None,
    ):
        if mode not in ("strict", "extended"):
            raise ValueError(f"unknown mode {mode!r}")
        names = list(torus) + list(filtered)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.torus = tuple(torus)
        self.filtered = tuple(filtered)
        self.k = len(self.torus)
        self.m = len(self.filtered)
        self.mode = mode
        zs = list(coproduct_terms or [])
        zs += [[]] * (self.m - len(zs))
        if len(zs) != self.m:
            raise ValueError("one coproduct correction per filtered variable")
        self.Z: list[dict] = []
        for zj in zs:
            if isinstance(zj, Mapping):
                d = {k: Scalar.coerce(v) for k, v in zj.items()}
            else:
                d = lin_combine((((l, r), Scalar.coerce(c)) for c, l, r in zj))
            self.Z.append(d)
        self.degrees = tuple(filtration_degrees) if filtration_degrees else self._auto_degrees()
        self._cop_cache: dict = {}

    # monomial helpers ------------------------------------------------------
    @property
    def unit_mono(self) -> Mono:
        return ((0,) * self.k, (0,) * self.m)

    def torus_mono(self, alpha) -> Mono:
        return (tuple(alpha), (0,) * self.m)

    def var_mono(self, name: str, power: int = 1) -> Mono:
        if name in self.torus:
            i = self.torus.index(name)
            a = [0] * self.k
            a[i] = power
            return (tuple(a), (0,) * self.m)
        if name in self.filtered:
            if power < 0:
                raise ValueError(f"{name} is not invertible")
            j = self.filtered.index(name)
            b = [0] * self.m
            b[j] = power
            return ((0,) * self.k, tuple(b))
        raise KeyError(name)

    def weight(self, m: Mono) -> int:
        return sum(b * d for b, d in zip(m[1], self.degrees))

    def mono_str(self, m: Mono) -> str:
        parts = []
        for name, e in zip(self.torus + self.filtered, m[0] + m[1]):
            if e == 1:
                parts.append(name)
            elif e > 0:
                parts.append(f"{name}^{e}")
            elif e < 0:
                parts.append(f"{name}^({e})")
        return "*".join(parts) or "1"

    def _auto_degrees(self) -> tuple:
        degs: list[int] = []
        for j, zj in enumerate(self.Z):
            d = 1
            for (l, r) in zj:
                dl = sum(b * degs[i] for i, b in enumerate(l[1][:j]))
                dr = sum(b * degs[i] for i, b in enumerate(r[1][:j]))
                if any(l[1][j:]) or any(r[1][j:]):
                    # filtration illegal; validate_hopf reports it
                    continue
                d = max(d, dl + dr)
            degs.append(d)
        return tuple(degs)

    # element constructors -----------------------------------------------------
    def element(self, terms: Mapping) -> Element:
        return Element(self, terms)

    def mono(self, m: Mono, c=1) -> Element:
        return Element._wrap(self, {m: Scalar.coerce(c)} if c else {})

    def var(self, name: str, power: int = 1) -> Element:
        return self.mono(self.var_mono(name, power))

    def one(self) -> Element:
        return self.mono(self.unit_mono)

    def zero(self) -> Element:
        return Element._wrap(self, {})

    def constant(self, c) -> Element:
        return self.mono(self.unit_mono, Scalar.coerce(c))

    def generators(self) -> list[Element]:
        return [self.var(n) for n in self.torus + self.filtered]

    def monomials(self, degree: int, box: int = 0) -> list[Mono]:
        """All monomials with filtered degree <= degree and |alpha_i| <= box."""
        out = []
        for alpha in product(range(-box, box + 1), repeat=self.k):
            for beta in filtered_exponents(self.m, degree):
                out.append((alpha, beta))
        out.sort(key=mono_sort_key)
        return out

    # Hopf structure -----------------------------------------------------------
    def generator_coproduct(self, j: int) -> dict:
        one = self.unit_mono
        zj = self.var_mono(self.filtered[j])
        out = dict(self.Z[j])
        lin_add(out, (zj, one), ONE)
        lin_add(out, (one, zj), ONE)
        return out

    def coproduct_mono(self, m: Mono) -> dict:
        """Delta(x^alpha z^beta) as a dict (left, right) -> Scalar, memoized."""
        hit = self._cop_cache.get(m)
        if hit is not None:
            return hit
        alpha, beta = m
        if not any(beta):
            res = {(m, m): ONE}
        else:
            j = max(i for i, b in enumerate(beta) if b)
            lower = list(beta)
            lower[j] -= 1
            base = self.coproduct_mono((alpha, tuple(lower)))
            res = tensor_mul(base, self.generator_coproduct(j))
        self._cop_cache[m] = res
        return res

    def counit_mono(self, m: Mono) -> Scalar:
        return ZERO if any(m[1]) else ONE


def filtered_exponents(m: int, degree: int) -> Iterator[tuple]:
    """All beta in N^m with |beta| <= degree."""
    if m == 0:
        yield ()
        return
    for first in range(degree + 1):
        for rest in filtered_exponents(m - 1, degree - first):
            yield (first,) + rest


def tensor_mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            lin_add(out, (mono_mul(l1, l2), mono_mul(r1, r2)), c1 * c2)
    return out


# ----------------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------------


def commutative_product(f: Element, g: Element) -> Element:
    out: dict = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            lin_add(out, mono_mul(m1, m2), c1 * c2)
    return Element._wrap(f.group, out)


def counit(f: Element) -> Scalar:
    """Evaluation at the identity: torus monomials give 1, filtered ones 0."""
    acc = ZERO
    for m, c in f.terms.items():
        if not any(m[1]):
            acc = acc + c
    return acc


def coproduct(f: Element) -> dict:
    out: dict = {}
    for m, c in f.terms.items():
        for pair, v in f.group.coproduct_mono(m).items():
            lin_add(out, pair, v * c)
    return out


def iterated_coproduct(f: Element, n: int) -> dict:
    """n-fold coproduct as a dict (m_1, ..., m_n) -> Scalar; n = 1 is the identity."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cur = {(m,): c for m, c in f.terms.items()}
    for _ in range(n - 1):
        nxt: dict = {}
        for legs, c in cur.items():
            for (l, r), v in f.group.coproduct_mono(legs[-1]).items():
                lin_add(nxt, legs[:-1] + (l, r), c * v)
        cur = nxt
    return cur


def iterated_coproduct_left(f: Element, n: int) -> dict:
    """Same tensor as :func:`iterated_coproduct` but always splitting the first leg."""
    cur = {(m,): c for m, c in f.terms.items()}
    for _ in range(n - 1):
        nxt: dict = {}
        for legs, c in cur.items():
            for (l, r), v in f.group.coproduct_mono(legs[0]).items():
                lin_add(nxt, (l, r) + legs[1:], c * v)
        cur = nxt
    return cur


def tensor_str(group: GroupData, t: Mapping) -> str:
    items = sorted(
        t.items(), key=lambda kv: tuple(mono_sort_key(m) for m in kv[0]), reverse=True
    )
    if not items:
        return "0"
    parts = []
    for legs, c in items:
        s = "⊗".join(group.mono_str(m) for m in legs)
        parts.append(format_linear([((), c)], lambda _: s))
    return " + ".join(parts).replace("+ -", "- ")


def _uses(m: Mono, j: int, extended: bool) -> str | None:
    """Return a reason string if monomial m may not appear as a leg of Z_j."""
    limit = j + 1 if extended else j
    if any(m[1][limit:]):
        return "uses a filtered variable that is not earlier"
    if extended and m[1][j] > 1:
        return "uses z_j nonlinearly"
    if not extended and any(m[0]):
        return "uses a torus variable in strict mode"
    return None


def validate_hopf(g: GroupData) -> ValidationReport:
    failures = []
    one = g.unit_mono
    for j, name in enumerate(g.filtered):
        zj = g.Z[j]
        # augmentation: (eps (x) id) Z_j = 0 = (id (x) eps) Z_j
        left_eps: dict = {}
        right_eps: dict = {}
        for (l, r), c in zj.items():
            lin_add(left_eps, r, g.counit_mono(l) * c)
            lin_add(right_eps, l, g.counit_mono(r) * c)
        if left_eps:
            failures.append(("counit", name, f"(eps⊗id)Z = {Element._wrap(g, left_eps)}"))
        if right_eps:
            failures.append(("counit", name, f"(id⊗eps)Z = {Element._wrap(g, right_eps)}"))
        # filtration legality
        for (l, r) in zj:
            for leg in (l, r):
                why = _uses(leg, j, g.mode == "extended")
                if why:
                    failures.append(("filtration", name, f"leg {g.mono_str(leg)} {why}"))
            if l[1][j] and r[1][j]:
                failures.append(("filtration", name, "z_j appears in both legs of one term"))
    if failures:
        # coproducts of later generators rely on the earlier ones being legal
        return ValidationReport(False, failures)
    for name in g.torus + g.filtered:
        f = g.var(name)
        a = iterated_coproduct(f, 3)
        b = iterated_coproduct_left(f, 3)
        if a != b:
            diff = dict(a)
            for key, v in b.items():
                lin_add(diff, key, -v)
            failures.append(("coassociativity", name, tensor_str(g, diff)))
    if g.mode == "strict":
        for j in range(min(2, g.m)):
            if g.Z[j] and g.m >= 2:
                failures.append(("filtration", g.filtered[j], "first two filtered variables must be primitive"))
    return ValidationReport(not failures, failures)
