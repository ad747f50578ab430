"""Evaluable Hopf 2-cocycles J : O(G) (x) O(G) -> scalars.

Every variant evaluates J on pairs of monomials (memoized per instance) and
extends bilinearly.  Variants:

* :class:`Bicharacter` - pulled back from the torus, ``J(x^a, x^b) = prod J_ij^{a_i b_j}``;
* :class:`ExpBivector` - ``(eps (x) eps) exp(c * sum r_ab D_a (x) D_b)`` for an
  abelian span of commuting left-invariant derivations;
* :class:`ExplicitSeries` - ``sum_n base^n/n! * eps(L_n f) * eps(R_n g)``;
* :class:`Convolution` - ``J_1 * ... * J_n`` under the convolution product;
* :class:`TriangularInverse` - convolution inverse solved degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Sequence

from .hopfmodel import Element, GroupData, counit, filtered_exponents, lin_add, mono_mul
from .liecore import Bivector, Derivation, LieAlgebra, derivations_commute
from .linalg import rref
from .scalars import ONE, ZERO, ExpUnit, Scalar


class NonTerminatingSeries(ValueError):
    pass


class InverseNotFound(ValueError):
    pass


class InvalidCocycle(ValueError):
    pass


class Cocycle:
    """Base class: bilinear functional with a per-instance memo table."""

    kind = "abstract"

    def __init__(self, group: GroupData):
        self.group = group
        self._memo: dict = {}

    # subclasses implement _value on monomials
    def _value(self, m1, m2) -> Scalar:
        raise NotImplementedError

    def value(self, m1, m2) -> Scalar:
        key = (m1, m2)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._value(m1, m2)
            self._memo[key] = hit
        return hit

    def __call__(self, f: Element, g: Element) -> Scalar:
        return eval_J(self, f, g)

    def inverse(self) -> "Cocycle":
        inv = getattr(self, "_inverse", None)
        if inv is None:
            inv = self._make_inverse()
            self._inverse = inv
        return inv

    def _make_inverse(self) -> "Cocycle":
        return TriangularInverse(self)

    def describe(self) -> str:
        return self.kind


# ----------------------------------------------------------------------------
# evaluation entry points
# ----------------------------------------------------------------------------


def eval_J(J: Cocycle, f: Element, g: Element) -> Scalar:
    acc = ZERO
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            v = J.value(m1, m2)
            if v:
                acc = acc + c1 * c2 * v
    return acc


def eval_Jinv(J: Cocycle, f: Element, g: Element) -> Scalar:
    return eval_J(J.inverse(), f, g)


def eval_Q(J: Cocycle, f: Element, g: Element) -> Scalar:
    return eval_J(J, f, g) - eval_J(J, g, f)


def eval_RJ(J: Cocycle, f: Element, g: Element) -> Scalar:
    """R^J = J_21^{-1} * J evaluated by Sweedler expansion."""
    return eval_J(RForm(J), f, g)


def convolve(*parts: Cocycle) -> "Convolution":
    return Convolution(list(parts))


# ----------------------------------------------------------------------------
# trivial cocycle and bicharacters
# ----------------------------------------------------------------------------


class Trivial(Cocycle):
    """eps (x) eps."""

    kind = "trivial"

    def _value(self, m1, m2):
        return ONE if not any(m1[1]) and not any(m2[1]) else ZERO

    def _make_inverse(self):
        return self


class Bicharacter(Cocycle):
    kind = "bicharacter"

    def __init__(self, group: GroupData, matrix: Sequence[Sequence]):
        super().__init__(group)
        if len(matrix) != group.k or any(len(row) != group.k for row in matrix):
            raise InvalidCocycle("bicharacter matrix must be k x k")
        self.matrix = [[Scalar.coerce(v) for v in row] for row in matrix]
        for row in self.matrix:
            for v in row:
                if not v:
                    raise InvalidCocycle("bicharacter entries must be units")

    def _value(self, m1, m2):
        if any(m1[1]) or any(m2[1]):
            return ZERO
        acc = ONE
        for i, a in enumerate(m1[0]):
            if not a:
                continue
            for j, b in enumerate(m2[0]):
                if b:
                    acc = acc * self.matrix[i][j] ** (a * b)
        return acc

    def _make_inverse(self):
        inv = Bicharacter(self.group, [[v.inverse() for v in row] for row in self.matrix])
        inv._inverse = self
        return inv


# ----------------------------------------------------------------------------
# exponentials of bivectors
# ----------------------------------------------------------------------------


class ExpBivector(Cocycle):
    """J = (eps (x) eps) exp(c * sum_{a,b} r_ab D_a (x) D_b)."""

    kind = "exp-bivector"

    def __init__(self, group: GroupData, lie: LieAlgebra, derivations: Sequence[Derivation],
                 r: Bivector, multiplier=Scalar.coerce(1), check: bool = True):
        super().__init__(group)
        self.lie = lie
        self.derivations = list(derivations)
        self.r = r
        self.c = Scalar.coerce(multiplier)
        if len(self.derivations) != lie.n:
            raise InvalidCocycle("one derivation per Lie basis vector")
        n = lie.n
        self._pairs = [(a, b, self.c * r.matrix[a][b]) for a in range(n) for b in range(n)
                       if r.matrix[a][b]]
        toral = [D.kind == "toral" for D in self.derivations]
        self._tt = [(a, b, v) for a, b, v in self._pairs if toral[a] and toral[b]]
        self._rest = [(a, b, v) for a, b, v in self._pairs if not (toral[a] and toral[b])]
        if check:
            self.check_admissible()

    def active(self) -> list[int]:
        return sorted({a for a, _, _ in self._pairs})

    def check_admissible(self) -> None:
        rows = rref(self.r.matrix)[0]
        for u in rows:
            for v in rows:
                if any(self.lie.bracket_vec(u, v)):
                    raise InvalidCocycle("support span of r is not abelian")
        act = self.active()
        for a in act:
            D = self.derivations[a]
            if not D.check_tag():
                raise InvalidCocycle(f"derivation {self.lie.names[a]} does not match its tag")
        for i, a in enumerate(act):
            for b in act[i + 1:]:
                if not derivations_commute(self.derivations[a], self.derivations[b]):
                    raise InvalidCocycle(
                        f"derivations {self.lie.names[a]} and {self.lie.names[b]} do not commute")

    def _apply(self, terms: dict, pairs) -> dict:
        out: dict = {}
        D = self.derivations
        for (l, r), c in terms.items():
            for a, b, v in pairs:
                la = D[a].apply_mono(l)
                if not la:
                    continue
                rb = D[b].apply_mono(r)
                if not rb:
                    continue
                for l2, c1 in la.items():
                    for r2, c2 in rb.items():
                        lin_add(out, (l2, r2), c * v * c1 * c2)
        return out

    def _value(self, m1, m2):
        g = self.group
        terms = {(m1, m2): ONE}
        acc = dict(terms)
        bound = g.weight(m1) + g.weight(m2) + 2 * (g.m + 1) + 8
        n = 0
        while terms:
            n += 1
            if n > bound:
                raise NonTerminatingSeries("exponential series did not terminate")
            terms = self._apply(terms, self._rest)
            inv_n = Scalar.coerce(1) / n
            terms = {k: v * inv_n for k, v in terms.items()}
            for k, v in terms.items():
                lin_add(acc, k, v)
        total = ZERO
        D = self.derivations
        for (l, r), c in acc.items():
            if any(l[1]) or any(r[1]):
                continue
            expo = ZERO
            for a, b, v in self._tt:
                ea = D[a].eigenvalue(l)
                if ea:
                    eb = D[b].eigenvalue(r)
                    if eb:
                        expo = expo + v * ea * eb
            total = total + (c * Scalar.exp(expo.linear_form()) if expo else c)
        return total

    def scaled(self, factor) -> "ExpBivector":
        return ExpBivector(self.group, self.lie, self.derivations, self.r,
                           self.c * Scalar.coerce(factor), check=False)

    def _make_inverse(self):
        inv = self.scaled(-1)
        inv._inverse = self
        return inv

    def rj_closed_form(self) -> "ExpBivector":
        """R^J for an exponential cocycle is exp(2 c r)."""
        return self.scaled(2)


# ----------------------------------------------------------------------------
# explicit operator series
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesOperator:
    """``power``: D^n;  ``falling``: D (D - 1) ... (D - n + 1)."""

    kind: str
    derivation: Derivation

    def nth(self, f: Element, n: int) -> Element:
        D = self.derivation
        cur = f
        for k in range(n):
            if cur.is_zero():
                break
            img = D(cur)
            cur = img - cur * k if self.kind == "falling" else img
        return cur


class ExplicitSeries(Cocycle):
    """J(f, g) = sum_n base^n / n! * eps(L_n f) * eps(R_n g).

    ``termination = (side, variable)``: the operator on that side must be a
    power of a derivation that strictly lowers the degree in ``variable``,
    so the n-th term vanishes once n exceeds that degree.
    """

    kind = "series"

    def __init__(self, group: GroupData, base, left: SeriesOperator, right: SeriesOperator,
                 termination: tuple[str, str]):
        super().__init__(group)
        self.base = Scalar.coerce(base)
        self.left = left
        self.right = right
        side, var = termination
        if side not in ("left", "right"):
            raise InvalidCocycle("termination side must be left or right")
        self.termination = (side, var)
        op = right if side == "right" else left
        if op.kind != "power":
            raise InvalidCocycle("the terminating operator must be a derivation power")
        names = group.torus + group.filtered
        if var not in names:
            raise InvalidCocycle(f"unknown termination variable {var!r}")
        self._vi = names.index(var)
        for v in names:
            img = op.derivation(group.var(v))
            dv = 1 if v == var else 0
            for m in img.terms:
                if (m[0] + m[1])[self._vi] >= dv:
                    raise InvalidCocycle(
                        f"terminating operator does not lower the degree in {var} on {v}")

    def _value(self, m1, m2):
        g = self.group
        side, _ = self.termination
        term_mono = m2 if side == "right" else m1
        top = (term_mono[0] + term_mono[1])[self._vi]
        if top < 0:
            raise NonTerminatingSeries("termination variable has negative degree")
        f, h = g.mono(m1), g.mono(m2)
        total = ZERO
        for n in range(top + 1):
            lf = counit(self.left.nth(f, n))
            if not lf:
                continue
            rg = counit(self.right.nth(h, n))
            if not rg:
                continue
            total = total + self.base ** n * Scalar.coerce(1) / factorial(n) * lf * rg
        return total


# ----------------------------------------------------------------------------
# convolution products, transposes and inverses
# ----------------------------------------------------------------------------


class Convolution(Cocycle):
    kind = "convolution"

    def __init__(self, parts: Sequence[Cocycle]):
        if not parts:
            raise InvalidCocycle("empty convolution")
        super().__init__(parts[0].group)
        self.parts = list(parts)

    def _value(self, m1, m2):
        if len(self.parts) == 1:
            return self.parts[0].value(m1, m2)
        head = self.parts[0]
        tail = self.parts[1:]
        rest = tail[0] if len(tail) == 1 else Convolution(tail)
        if len(tail) > 1:
            # reuse one tail instance so its memo table is shared
            rest = self.__dict__.setdefault("_tail", rest)
        g = self.group
        total = ZERO
        d1 = g.coproduct_mono(m1)
        d2 = g.coproduct_mono(m2)
        for (a1, a2), c1 in d1.items():
            for (b1, b2), c2 in d2.items():
                v = head.value(a1, b1)
                if not v:
                    continue
                w = rest.value(a2, b2)
                if w:
                    total = total + c1 * c2 * v * w
        return total

    def _make_inverse(self):
        inv = Convolution([p.inverse() for p in reversed(self.parts)])
        inv._inverse = self
        return inv


class Transposed(Cocycle):
    """J_21(f, g) = J(g, f)."""

    kind = "transposed"

    def __init__(self, J: Cocycle):
        super().__init__(J.group)
        self.J = J

    def _value(self, m1, m2):
        return self.J.value(m2, m1)

    def _make_inverse(self):
        return Transposed(self.J.inverse())


class RForm(Convolution):
    """R^J = (J^{-1})_21 * J."""

    kind = "r-form"

    def __init__(self, J: Cocycle):
        super().__init__([Transposed(J.inverse()), J])
        self.J = J


class TriangularInverse(Cocycle):
    """Convolution inverse solved along the coradical filtration.

    With Delta(x^a z^b) = x^a z^b (x) x^a + (terms whose left leg has lower
    weight), the identity sum J^{-1}(f_1, g_1) J(f_2, g_2) = eps(f) eps(g) is
    triangular in the weight of (f_1, g_1).
    """

    kind = "inverse"

    def __init__(self, J: Cocycle):
        super().__init__(J.group)
        self.J = J
        self._inverse = J

    def _value(self, m1, m2):
        g = self.group
        w = g.weight(m1) + g.weight(m2)
        acc = ONE if not any(m1[1]) and not any(m2[1]) else ZERO
        diag = ZERO
        for (a1, a2), c1 in g.coproduct_mono(m1).items():
            for (b1, b2), c2 in g.coproduct_mono(m2).items():
                jv = self.J.value(a2, b2)
                if not jv:
                    continue
                if a1 == m1 and b1 == m2:
                    diag = diag + c1 * c2 * jv
                    continue
                if g.weight(a1) + g.weight(b1) >= w:
                    raise InverseNotFound("coproduct is not triangular for this pair")
                acc = acc - c1 * c2 * self.value(a1, b1) * jv
        if not diag:
            raise InverseNotFound("zero diagonal coefficient")
        return acc / diag


# ----------------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------------


@dataclass
class AxiomReport:
    ok: bool
    checked: int
    violations: list = field(default_factory=list)  # (kind, witness, lhs, rhs)


def monomial_triples(g: GroupData, degree: int, box: int):
    """Monomial triples with total filtered degree <= degree, torus exponents in the box."""
    alphas = list(product(range(-box, box + 1), repeat=g.k))
    for b1 in filtered_exponents(g.m, degree):
        for b2 in filtered_exponents(g.m, degree - sum(b1)):
            for b3 in filtered_exponents(g.m, degree - sum(b1) - sum(b2)):
                for a1 in alphas:
                    for a2 in alphas:
                        for a3 in alphas:
                            yield (a1, b1), (a2, b2), (a3, b3)


def axiom_sides(J: Cocycle, a, b, c) -> tuple[Scalar, Scalar]:
    g = J.group
    lhs = ZERO
    da, db, dc = g.coproduct_mono(a), g.coproduct_mono(b), g.coproduct_mono(c)
    for (a1, a2), ca in da.items():
        for (b1, b2), cb in db.items():
            v = J.value(a2, b2)
            if v:
                w = J.value(mono_mul(a1, b1), c)
                if w:
                    lhs = lhs + ca * cb * v * w
    rhs = ZERO
    for (b1, b2), cb in db.items():
        for (c1, c2), cc in dc.items():
            v = J.value(b2, c2)
            if v:
                w = J.value(a, mono_mul(b1, c1))
                if w:
                    rhs = rhs + cb * cc * v * w
    return lhs, rhs


def cocycle_axiom_check(J: Cocycle, d: int, box: int = 1, max_violations: int = 5) -> AxiomReport:
    g = J.group
    bad = []
    count = 0
    one = g.unit_mono
    for m in g.monomials(d, box):
        eps = g.counit_mono(m)
        for side, val in (("J(a,1)", J.value(m, one)), ("J(1,a)", J.value(one, m))):
            count += 1
            if val != eps:
                bad.append(("normalization", f"{side} with a={g.mono_str(m)}", str(val), str(eps)))
    for a, b, c in monomial_triples(g, d, box):
        count += 1
        lhs, rhs = axiom_sides(J, a, b, c)
        if lhs != rhs:
            bad.append(("cocycle", ", ".join(g.mono_str(x) for x in (a, b, c)), str(lhs), str(rhs)))
            if len(bad) >= max_violations:
                break
    return AxiomReport(not bad, count, bad)


def check_inverse(J: Cocycle, d: int, box: int = 1) -> AxiomReport:
    """J^{-1} * J = eps (x) eps on all monomial pairs of total degree <= d."""
    g = J.group
    conv = Convolution([J.inverse(), J])
    bad = []
    count = 0
    mons = g.monomials(d, box)
    for m1 in mons:
        for m2 in mons:
            if sum(m1[1]) + sum(m2[1]) > d:
                continue
            count += 1
            val = conv.value(m1, m2)
            expect = g.counit_mono(m1) * g.counit_mono(m2)
            if val != expect:
                bad.append(("inverse", f"{g.mono_str(m1)}, {g.mono_str(m2)}", str(val), str(expect)))
    return AxiomReport(not bad, count, bad)


def borel_group(opposite: bool = True) -> GroupData:
    """O(B) = C[x^{+-1}, y] for the affine group of the line.

    With ``opposite`` (the default) the coproduct is
    Delta(y) = y (x) x + 1 (x) y, i.e. composition is read in the order for
    which X = x d/dx, Y = x d/dy give a right 2-cocycle below.  Otherwise
    Delta(y) = y (x) 1 + x (x) y.
    """
    x1, y1, one = ((1,), (0,)), ((0,), (1,)), ((0,), (0,))
    if opposite:
        z = [(1, y1, x1), (-1, y1, one)]
    else:
        z = [(1, x1, y1), (-1, one, y1)]
    return GroupData(["x"], ["y"], [z], mode="extended")


def borel_builtin(h="h", group: GroupData | None = None) -> ExplicitSeries:
    """sum_n h^n/n! X(X-1)...(X-n+1) (x) Y^n with X = x d/dx, Y = x d/dy."""
    g = group or borel_group()
    base = Scalar.param(h) if isinstance(h, str) else Scalar.coerce(h)
    X = Derivation(g, {"x": g.var("x")}, kind="toral", name="X")
    Y = Derivation(g, {"y": g.var("x")}, kind="nilpotent", name="Y")
    return ExplicitSeries(g, base, SeriesOperator("falling", X), SeriesOperator("power", Y),
                          ("right", "y"))
