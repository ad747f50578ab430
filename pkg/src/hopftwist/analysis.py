"""Structure of twisted algebras: lattices, supports, centers and verdicts.

Support of an exponential cocycle.  The derivations in the span ``h`` of
``r`` commute, so the closure of the subgroup they generate has Lie algebra

    hull(torus part of h)  +  unipotent part of h,

where ``hull`` is the smallest subspace defined over Q (in eigenvalue
coordinates on the torus variables) containing the torus projections.  The
center is then predicted to be the functions killed by every derivation in
``h``; for a bicharacter it is spanned by the monomials x^gamma with gamma in
the kernel lattice.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .cocycle import Bicharacter, Cocycle, ExpBivector, Trivial, eval_RJ
from .hopfmodel import Element, lin_add, mono_sort_key
from .liecore import Bivector, SkewForm, invert_bivector, support_basis
from .linalg import nullspace, rank, rref
from .scalars import ONE, ZERO, Scalar
from .twistalg import TwistedAlgebra, TwistedElement, format_scalar, letter_element, twisted_product


class ModeUnsupported(ValueError):
    """The requested analysis needs strict (nilpotent) mode."""


class BoxTooSmall(UserWarning):
    """The predicted center has generators outside the search box."""


# ----------------------------------------------------------------------------
# integer lattices
# ----------------------------------------------------------------------------


@dataclass
class SNFResult:
    U: list
    D: list
    V: list
    factors: list  # diagonal of D, nonzero entries first, d_1 | d_2 | ...


def _ident(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf(A: Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form: U * A * V = D with U, V unimodular."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(v) for v in row] for row in A]
    U, V = _ident(m), _ident(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        cells = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not cells:
            break
        _, i, j = min(cells)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
        t += 1
    factors = [D[i][i] for i in range(min(m, n))]
    return SNFResult(U, D, V, factors)


def hnf_rows(rows: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Row-style Hermite normal form: a canonical basis of the row lattice."""
    a = [list(map(int, r)) for r in rows if any(r)]
    out: list[list[int]] = []
    col = 0
    while a and col < n:
        nz = [r for r in a if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for c in range(n):
                    r[c] -= q * p[c]
            nz = [r for r in nz if r[col]]
        p = nz[0]
        if p[col] < 0:
            p[:] = [-v for v in p]
        a = [r for r in a if r is not p and any(r)]
        out.append(p)
        col += 1
    # reduce entries above the pivots
    piv = [next(c for c in range(n) if r[c]) for r in out]
    for i in range(len(out)):
        for k in range(i):
            q = out[k][piv[i]] // out[i][piv[i]]
            out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def integer_kernel(M: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """Basis of {x in Z^n : M x = 0}."""
    if not M:
        return _ident(n)
    res = snf(M)
    r = sum(1 for d in res.factors if d)
    return hnf_rows([[res.V[i][j] for i in range(n)] for j in range(r, n)], n)


def lattice_factors(gamma: Sequence[Sequence[int]], k: int) -> list[int]:
    """Invariant factors of Z^k / Gamma: 1s dropped, 0 for each free summand."""
    if gamma:
        d = [f for f in snf(gamma).factors if f]
    else:
        d = []
    return [f for f in d if f != 1] + [0] * (k - len(d))


def _clear(vals: Sequence[Fraction]) -> list[int]:
    den = lcm(*(v.denominator for v in vals)) if vals else 1
    ints = [int(v * den) for v in vals]
    g = gcd(*ints) if any(ints) else 1
    return [v // g for v in ints]


# ----------------------------------------------------------------------------
# supports
# ----------------------------------------------------------------------------


@dataclass
class TorusSupport:
    k: int
    gamma: list          # HNF basis of the kernel lattice
    factors: list        # invariant factors of Z^k / Gamma

    @property
    def gamma_rank(self) -> int:
        return len(self.gamma)

    @property
    def dim_s(self) -> int:
        return self.factors.count(0)

    @property
    def component_order(self) -> int:
        out = 1
        for f in self.factors:
            if f:
                out *= f
        return out

    def as_dict(self) -> dict:
        return {"gamma": self.gamma, "gamma_rank": self.gamma_rank,
                "invariant_factors": self.factors, "dim_S": self.dim_s,
                "component_group_order": self.component_order}


def torus_support(lam: Sequence[Sequence[Scalar]]) -> TorusSupport:
    """Gamma = {gamma in Z^k : prod_j lam_ji^gamma_j = 1 for every i}.

    Each lam_ij must be exp(rational linear form) times a root of unity;
    exponent symbols are treated as independent transcendentals.
    """
    k = len(lam)
    units = [[lam[i][j].to_expunit() for j in range(k)] for i in range(k)]
    N = lcm(1, *(u.order for row in units for u in row if u.order))
    rational_rows: list[list[int]] = []
    cong_rows: list[list[int]] = []
    for i in range(k):
        keys = sorted({s for j in range(k) for s, _ in units[j][i].exponent})
        for s in keys:
            vals = [dict(units[j][i].exponent).get(s, Fraction(0)) for j in range(k)]
            rational_rows.append(_clear(vals))
        roots = [units[j][i].root * (N // units[j][i].order) if units[j][i].order else 0
                 for j in range(k)]
        if any(r % N for r in roots):
            cong_rows.append(roots)
    c = len(cong_rows)
    M = [row + [0] * c for row in rational_rows]
    for t, row in enumerate(cong_rows):
        M.append(row + [N if s == t else 0 for s in range(c)])
    M = [row for row in M if any(row)]
    if not M:
        gamma = _ident(k)
    else:
        kern = integer_kernel(M, k + c)
        gamma = hnf_rows([v[:k] for v in kern], k)
    return TorusSupport(k, gamma, lattice_factors(gamma, k))


@dataclass
class UnipotentSupport:
    basis: list           # RREF basis of the span of r
    dim_v: int
    dim_u: int
    nondegenerate: bool   # span of r is the whole algebra
    omega: SkewForm | None

    @property
    def even(self) -> bool:
        return self.dim_v % 2 == 0

    def as_dict(self, names: Sequence[str]) -> dict:
        return {"basis": [_vec_str(v, names) for v in self.basis], "dim_V": self.dim_v,
                "dim_U": self.dim_u, "nondegenerate": self.nondegenerate, "even": self.even}


def unipotent_support(r: Bivector) -> UnipotentSupport:
    basis = support_basis(r)
    dim_v = len(basis)
    omega = invert_bivector(r) if dim_v else None
    return UnipotentSupport(basis, dim_v, r.lie.n, dim_v == r.lie.n, omega)


def _vec_str(v: Sequence[Scalar], names: Sequence[str]) -> str:
    parts = []
    for c, n in zip(v, names):
        if not c:
            continue
        if c.is_one():
            parts.append(n)
        elif c == -1:
            parts.append(f"-{n}")
        else:
            t = str(c)
            parts.append(f"({t})*{n}" if " " in t else f"{t}*{n}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _rational_hull(vectors: Sequence[Sequence[Scalar]], n: int) -> list[list[int]]:
    """Integer basis of the smallest Q-subspace whose K-span contains ``vectors``."""
    rows: list[list[Fraction]] = []
    for v in vectors:
        if not any(v):
            continue
        den = ONE
        for c in v:
            den = den * c.numerator_denominator()[1]
        cleared = [c * den for c in v]
        coords: dict = {}
        for idx, c in enumerate(cleared):
            for key, q in c.coordinates().items():
                coords.setdefault(key, [Fraction(0)] * n)[idx] = Fraction(q)
        rows.extend(coords.values())
    if not rows:
        return []
    red, _ = rref(rows)
    return [_clear([x.to_fraction() for x in row]) for row in red]


@dataclass
class SupportReport:
    method: str                    # bicharacter | exp-bivector | trivial
    dim_g: int
    torus: TorusSupport | None     # from the torus commutation matrix
    unipotent: UnipotentSupport | None
    gamma: list                    # characters trivial on the support
    dim_h: int
    dim_v: int                     # dimension of the unipotent part of the support
    h_basis: list = field(default_factory=list)
    central_coordinates: list = field(default_factory=list)

    @property
    def gamma_rank(self) -> int:
        return len(self.gamma)

    @property
    def full(self) -> bool:
        return self.dim_h == self.dim_g and not self.gamma

    def as_dict(self, group, lie_names=None) -> dict:
        out = {"method": self.method, "dim_G": self.dim_g, "dim_H": self.dim_h,
               "dim_V": self.dim_v, "gamma": self.gamma, "gamma_rank": self.gamma_rank,
               "support_is_G": self.full}
        if self.torus is not None:
            out["torus"] = self.torus.as_dict()
        if self.unipotent is not None and lie_names is not None:
            out["bivector_span"] = self.unipotent.as_dict(lie_names)
        return out


def support_report(J: Cocycle) -> SupportReport:
    """Support of J (strict mode only)."""
    g = J.group
    if g.mode != "strict":
        raise ModeUnsupported("support analysis needs strict mode")
    lam = [[ONE] * g.k for _ in range(g.k)]
    ts = None
    if isinstance(J, Trivial):
        return SupportReport("trivial", g.k + g.m, torus_support(lam) if g.k else None, None,
                             _ident(g.k), 0, 0)
    if isinstance(J, Bicharacter):
        lam = [[eval_RJ(J, g.var(a), g.var(b)) for b in g.torus] for a in g.torus]
        ts = torus_support(lam)
        return SupportReport("bicharacter", g.k + g.m, ts, None, ts.gamma, ts.dim_s, 0)
    if isinstance(J, ExpBivector):
        if g.k:
            lam = [[eval_RJ(J, g.var(a), g.var(b)) for b in g.torus] for a in g.torus]
            ts = torus_support(lam)
        us = unipotent_support(J.r)
        h = us.basis
        D = J.derivations
        tor = [a for a, d in enumerate(D) if d.kind == "toral"]
        nil = [a for a, d in enumerate(D) if d.kind == "nilpotent"]
        # eigenvalue coordinates of the torus projections
        eig = []
        for v in h:
            e = [ZERO] * g.k
            for a in tor:
                if v[a]:
                    for i, x in enumerate(g.torus):
                        e[i] = e[i] + v[a] * D[a].eigenvalue(g.var_mono(x))
            eig.append(e)
        hull = _rational_hull(eig, g.k)
        gamma = integer_kernel(hull, g.k) if hull else _ident(g.k)
        dim_v = rank([[v[a] for a in nil] for v in h]) if nil else 0
        return SupportReport("exp-bivector", g.k + g.m, ts, us, gamma, len(hull) + dim_v, dim_v, h)
    raise ModeUnsupported(f"no support computation for {type(J).__name__} cocycles")


# ----------------------------------------------------------------------------
# centers
# ----------------------------------------------------------------------------


def box_words(group, d: int, box: int):
    """Words x^alpha z^beta with |alpha_i| <= box and sum(beta) <= d."""
    return group.monomials(d, box)


def _block_nullspace(columns: list[dict]) -> list[dict]:
    """Kernel of the linear map sending unit vector i to ``columns[i]``.

    Columns sharing no row are solved independently.  Returns sparse
    vectors {column index: coefficient}.
    """
    parent = list(range(len(columns)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: dict = {}
    for i, col in enumerate(columns):
        for key in col:
            j = owner.setdefault(key, i)
            ra, rb = find(i), find(j)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict = {}
    for i in range(len(columns)):
        blocks.setdefault(find(i), []).append(i)
    out = []
    for root in sorted(blocks):
        cols = blocks[root]
        keys = sorted({k for i in cols for k in columns[i]}, key=repr)
        if not keys:
            out.extend({i: ONE} for i in cols)
            continue
        rows = [[columns[i].get(k, ZERO) for i in cols] for k in keys]
        for v in nullspace(rows, len(cols)):
            out.append({cols[t]: c for t, c in enumerate(v) if c})
    return out


@dataclass
class CenterBasis:
    degree: int
    box: int
    elements: list                     # TwistedElements in normal form
    verified: list                     # oracle re-check per element
    predicted: list | None = None      # commutative Elements spanning the predicted center in the box
    predicted_central: bool | None = None
    warnings: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def constants_only(self) -> bool:
        return self.dimension == 1 and self.elements[0].terms.keys() == {self.elements[0].alg.unit_word}

    @property
    def matches_prediction(self) -> bool | None:
        if self.predicted is None:
            return None
        return len(self.predicted) == self.dimension and bool(self.predicted_central)


def oracle_central(J: Cocycle, f: Element) -> bool:
    """f commutes with every generator under the twisted product."""
    g = J.group
    gens = [letter_element(J, ("x", i, e)) for i in range(g.k) for e in (1, -1)]
    gens += [g.var(z) for z in g.filtered]
    return all(twisted_product(f, a, J) == twisted_product(a, f, J) for a in gens)


def center_upto(alg: TwistedAlgebra, d: int = 4, box: int = 4) -> CenterBasis:
    """Center of O(G)_J within the box, by an exact linear solve.

    Unknowns are the words of the box; the constraints are the commutators
    with all generators, computed by normal-form rewriting.  Each basis
    element is then re-checked through the twisted product.
    """
    g = alg.g
    words = box_words(g, d, box)
    gens = [alg.x_word(i) for i in range(g.k)] + [alg.z_word(j) for j in range(g.m)]
    columns = []
    for w in words:
        col: dict = {}
        for n, gw in enumerate(gens):
            for v, c in alg.mul_words(w, gw).items():
                lin_add(col, (n, v), c)
            for v, c in alg.mul_words(gw, w).items():
                lin_add(col, (n, v), -c)
        columns.append(col)
    elements = []
    for vec in _block_nullspace(columns):
        terms = {words[i]: c for i, c in vec.items()}
        # normalise: leading (largest) word gets coefficient 1
        lead = max(terms, key=mono_sort_key)
        inv = terms[lead].inverse()
        elements.append(TwistedElement(alg, {w: c * inv for w, c in terms.items()}))
    elements.sort(key=lambda e: sorted((mono_sort_key(w) for w in e.terms), reverse=True))
    verified = [oracle_central(alg.J, alg.expand(e.terms)) for e in elements]
    cb = CenterBasis(d, box, elements, verified)
    pred = predicted_center(alg.J, d, box)
    if pred is not None:
        cb.predicted = pred
        cb.predicted_central = all(oracle_central(alg.J, f) for f in pred)
        try:
            sup = support_report(alg.J)
        except ModeUnsupported:
            sup = None
        if sup is not None and not sup.full and len(pred) <= 1:
            msg = (f"predicted center is larger than the constants but has no "
                   f"nonconstant elements with degree <= {d} and torus box {box}")
            cb.warnings.append(msg)
            warnings.warn(BoxTooSmall(msg), stacklevel=2)
    return cb


def predicted_center(J: Cocycle, d: int = 4, box: int = 4) -> list[Element] | None:
    """Basis (in the commutative model) of O(G/H) within the box, or None."""
    g = J.group
    if g.mode != "strict":
        return None
    monos = box_words(g, d, box)
    if isinstance(J, Trivial):
        return [g.mono(m) for m in monos]
    if isinstance(J, Bicharacter):
        gamma = support_report(J).gamma
        lat = _lattice_member(gamma, g.k)
        return [g.mono(m) for m in monos if lat(m[0])]
    if isinstance(J, ExpBivector):
        sup = support_report(J)
        ders = []
        for v in sup.h_basis:
            ders.append([(J.derivations[a], c) for a, c in enumerate(v) if c])
        columns = []
        for m in monos:
            col: dict = {}
            for n, comb in enumerate(ders):
                for D, c in comb:
                    for mm, v in D.apply_mono(m).items():
                        lin_add(col, (n, mm), c * v)
            columns.append(col)
        out = []
        for vec in _block_nullspace(columns):
            lead = max(vec, key=lambda i: mono_sort_key(monos[i]))
            inv = vec[lead].inverse()
            out.append(Element._wrap(g, {monos[i]: c * inv for i, c in vec.items()}))
        return out
    return None


def _lattice_member(gamma: list, k: int):
    if len(gamma) == k and all(gamma[i][i] == 1 for i in range(k)):
        return lambda a: True
    if not gamma:
        return lambda a: not any(a)

    def member(a):
        rows = [list(r) for r in gamma]
        # a is in the lattice iff appending it does not change the lattice
        return hnf_rows(rows + [list(a)], k) == hnf_rows(rows, k)

    return member


# ----------------------------------------------------------------------------
# verdicts
# ----------------------------------------------------------------------------


@dataclass
class StructureReport:
    verdict: str                 # QuantumTorus | WeylTensorPoly | CrossedProduct | Undetermined
    model: str                   # human-readable model, e.g. "W(1)⊗poly[x]"
    simple: str                  # simple | not simple | undetermined
    gamma_rank: int | None
    dim_v: int | None
    parameters: dict = field(default_factory=dict)
    justification: list = field(default_factory=list)
    center_box: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "model": self.model, "simple": self.simple,
                "gamma_rank": self.gamma_rank, "dimV": self.dim_v,
                "parameters": self.parameters, "justification": self.justification,
                "center_box": self.center_box}


def _center_box_dict(cb: CenterBasis | None) -> dict:
    if cb is None:
        return {}
    return {"degree": cb.degree, "box": cb.box, "dimension": cb.dimension,
            "constants_only": cb.constants_only, "oracle_verified": all(cb.verified),
            "matches_prediction": cb.matches_prediction}


def simplicity_verdict(alg: TwistedAlgebra, support: SupportReport | None = None,
                       center: CenterBasis | None = None) -> StructureReport:
    """O(G)_J is simple exactly when J is supported on all of G."""
    J = alg.J
    try:
        support = support or support_report(J)
    except ModeUnsupported as exc:
        return StructureReport("Undetermined", "", "undetermined", None, None,
                               justification=[f"ModeUnsupported: {exc}"],
                               center_box=_center_box_dict(center))
    simple = support.full
    just = [
        f"kernel lattice of characters trivial on the support has rank {support.gamma_rank}",
        f"support dimension {support.dim_h} of {support.dim_g}, unipotent part dim V = {support.dim_v}",
        "simple iff the support is the whole group (trivial center)",
    ]
    if center is not None:
        just.append(f"center within degree {center.degree}, torus box {center.box}: "
                    f"{center.dimension} basis element(s)")
        if center.constants_only != simple and center.warnings == []:
            just.append("warning: the box computation disagrees with the support verdict")
    return StructureReport("", "", "simple" if simple else "not simple", support.gamma_rank,
                           support.dim_v, justification=just, center_box=_center_box_dict(center))


def _free_filtered(alg: TwistedAlgebra) -> tuple[list[int], list[int], list[list[Scalar]] | None]:
    """Split filtered variables into those central in the filtered subalgebra
    and the rest; return the commutator matrix of the rest when every entry
    is a scalar."""
    g = alg.g
    P = alg.P
    central = []
    for j in range(g.m):
        ok = all(not P.C.get((max(j, l), min(j, l))) for l in range(g.m) if l != j)
        if ok:
            central.append(j)
    rest = [j for j in range(g.m) if j not in central]
    mat = []
    for a in rest:
        row = []
        for b in rest:
            if a == b:
                row.append(ZERO)
                continue
            c = P.C[(max(a, b), min(a, b))]
            if set(c) - {alg.unit_word}:
                return central, rest, None
            v = c.get(alg.unit_word, ZERO)
            row.append(v if a > b else -v)
        mat.append(row)
    return central, rest, mat


def structure_report(alg: TwistedAlgebra, center: CenterBasis | None = None) -> StructureReport:
    """Isomorphism type of O(G)_J with the evidence used to reach it."""
    g = alg.g
    rep = simplicity_verdict(alg, center=center)
    if g.mode != "strict" or rep.simple == "undetermined":
        rep.verdict, rep.model = "Undetermined", "no canonical model (extended mode)"
        return rep
    lam = alg.P.lam
    lam_str = [[format_scalar(v) for v in row] for row in lam]
    if g.m == 0:
        rep.verdict = "QuantumTorus"
        rep.model = f"E(λ) on {', '.join(g.torus)}"
        rep.parameters = {"lambda": lam_str}
        rep.justification.append("only torus generators: x_i·x_j = λ_ij x_j·x_i")
        return rep
    central, rest, mat = _free_filtered(alg)
    if mat is None or (mat and rank(mat) != len(rest)):
        rep.verdict, rep.model = "Undetermined", "filtered commutators are not a canonical Weyl form"
        return rep
    n = len(rest) // 2
    poly = [g.filtered[j] for j in central]
    weyl = f"W({n})" if n else ""
    poly_str = f"poly[{', '.join(poly)}]" if poly else ""
    base = "⊗".join(p for p in (weyl, poly_str) if p) or "C"
    rep.parameters = {"weyl_pairs": n, "central_coordinates": poly,
                      "weyl_generators": [g.filtered[j] for j in rest]}
    rep.justification.append(
        f"filtered generators {', '.join(g.filtered[j] for j in rest) or '(none)'} have a "
        f"nondegenerate scalar commutator matrix; {', '.join(poly) or 'no generator'} central "
        "among the filtered generators")
    if g.k == 0:
        rep.verdict, rep.model = "WeylTensorPoly", base
        if center is not None and center.predicted is not None:
            rep.justification.append("center agrees with the prediction" if center.matches_prediction
                                     else "center disagrees with the prediction")
        return rep
    rep.verdict = "CrossedProduct"
    tor = ", ".join(f"{x}^±1" for x in g.torus)
    rep.model = f"({base}) #_J C[{tor}]"
    rep.parameters["lambda"] = lam_str
    rep.parameters["torus_action"] = {
        f"{g.torus[i]}·{g.filtered[j]}·{g.torus[i]}^(-1) − {g.filtered[j]}": alg.nf_str(alg.P.p[(i, j)])
        for i in range(g.k) for j in range(g.m)}
    rep.justification.append("torus generators act on the filtered subalgebra by the listed automorphisms")
    return rep


__all__ = [
    "BoxTooSmall",
    "CenterBasis",
    "ModeUnsupported",
    "SNFResult",
    "StructureReport",
    "SupportReport",
    "TorusSupport",
    "UnipotentSupport",
    "box_words",
    "center_upto",
    "hnf_rows",
    "integer_kernel",
    "lattice_factors",
    "oracle_central",
    "predicted_center",
    "simplicity_verdict",
    "snf",
    "structure_report",
    "support_report",
    "torus_support",
    "unipotent_support",
]
