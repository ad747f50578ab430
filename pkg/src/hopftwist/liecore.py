"""Lie algebras of left-invariant derivations, bivectors and the CYBE.

A :class:`LieAlgebra` is given by structure constants.  A realization assigns
to every basis vector a :class:`Derivation` of O(G), given on generators and
extended by the Leibniz rule.  Bivectors ``r = sum_{a,b} r_ab e_a (x) e_b`` are
stored as antisymmetric matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .hopfmodel import Element, GroupData, coproduct, lin_add, mono_mul
from .linalg import inverse, matmul, rank, rref, transpose
from .scalars import ONE, ZERO, Scalar


class CentralizerViolation(ValueError):
    pass


class NotBlockDecomposable(ValueError):
    pass


# ----------------------------------------------------------------------------
# Lie algebras
# ----------------------------------------------------------------------------


class LieAlgebra:
    """Structure constants ``[e_a, e_b] = sum_e c[a][b][e] e_e``."""

    def __init__(self, names: Sequence[str], brackets: Mapping | None = None):
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n:
            raise ValueError("basis names must be unique")
        n = self.n
        self.c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b), vec in (brackets or {}).items():
            ia, ib = self.index(a), self.index(b)
            for e, v in vec.items():
                v = Scalar.coerce(v)
                ie = self.index(e)
                self.c[ia][ib][ie] = self.c[ia][ib][ie] + v
                self.c[ib][ia][ie] = self.c[ib][ia][ie] - v

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        return self.names.index(name)

    def bracket_vec(self, u: Sequence, v: Sequence) -> list[Scalar]:
        out = [ZERO] * self.n
        for a, ua in enumerate(u):
            if not ua:
                continue
            for b, vb in enumerate(v):
                if not vb:
                    continue
                f = ua * vb
                for e, c in enumerate(self.c[a][b]):
                    if c:
                        out[e] = out[e] + f * c
        return out

    def basis_vec(self, a) -> list[Scalar]:
        v = [ZERO] * self.n
        v[self.index(a)] = ONE
        return v

    def is_abelian_on(self, idx: Sequence[int]) -> bool:
        return all(not any(self.c[a][b]) for a in idx for b in idx)

    def brackets_dict(self) -> dict:
        out = {}
        for a in range(self.n):
            for b in range(a + 1, self.n):
                vec = {self.names[e]: v for e, v in enumerate(self.c[a][b]) if v}
                if vec:
                    out[(self.names[a], self.names[b])] = vec
        return out


def check_jacobi(L: LieAlgebra) -> bool:
    return not jacobi_violations(L)


def jacobi_violations(L: LieAlgebra) -> list[tuple]:
    bad = []
    for a in range(L.n):
        for b in range(a + 1, L.n):
            for c in range(b + 1, L.n):
                ea, eb, ec = L.basis_vec(a), L.basis_vec(b), L.basis_vec(c)
                t1 = L.bracket_vec(ea, L.bracket_vec(eb, ec))
                t2 = L.bracket_vec(eb, L.bracket_vec(ec, ea))
                t3 = L.bracket_vec(ec, L.bracket_vec(ea, eb))
                s = [x + y + z for x, y, z in zip(t1, t2, t3)]
                if any(s):
                    bad.append((L.names[a], L.names[b], L.names[c]))
    return bad


# ----------------------------------------------------------------------------
# derivations
# ----------------------------------------------------------------------------


class Derivation:
    """A derivation of O(G) given by its values on the generators.

    ``kind`` is ``"toral"`` (each generator is an eigenvector) or
    ``"nilpotent"`` (strictly lowers the weight given by ``witness``,
    which defaults to 0 on torus variables and the filtration degree on
    filtered variables).
    """

    def __init__(self, group: GroupData, action: Mapping[str, Element], kind: str = "nilpotent",
                 witness: Mapping[str, int] | None = None, name: str = ""):
        if kind not in ("toral", "nilpotent"):
            raise ValueError(f"unknown derivation kind {kind!r}")
        self.group = group
        self.kind = kind
        self.name = name
        names = group.torus + group.filtered
        for v in action:
            if v not in names:
                raise KeyError(f"unknown variable {v!r}")
        self.action = {v: action.get(v, group.zero()) for v in names}
        if witness is None:
            witness = {v: 0 for v in group.torus}
            witness.update(zip(group.filtered, group.degrees))
        self.witness = dict(witness)
        self._eigen = None
        self._cache: dict = {}

    # eigenvalues of a toral derivation on each generator
    def eigenvalues(self) -> list[Scalar] | None:
        if self._eigen is None:
            vals = []
            for v in self.group.torus + self.group.filtered:
                img = self.action[v]
                m = self.group.var_mono(v)
                if img.is_zero():
                    vals.append(ZERO)
                elif set(img.terms) == {m}:
                    vals.append(img.terms[m])
                else:
                    return None
            self._eigen = vals
        return self._eigen

    def eigenvalue(self, m) -> Scalar:
        ev = self.eigenvalues()
        if ev is None:
            raise ValueError(f"derivation {self.name} is not diagonal")
        acc = ZERO
        for e, lam in zip(m[0] + m[1], ev):
            if e and lam:
                acc = acc + lam * e
        return acc

    def check_tag(self) -> bool:
        if self.kind == "toral":
            return self.eigenvalues() is not None
        for v, img in self.action.items():
            w = self.witness[v]
            for m in img.terms:
                if self._weight(m) >= w:
                    return False
        return True

    def _weight(self, m) -> int:
        names = self.group.torus + self.group.filtered
        return sum(e * self.witness[v] for v, e in zip(names, m[0] + m[1]))

    def apply_mono(self, m) -> dict:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        g = self.group
        out: dict = {}
        if self.kind == "toral" and self.eigenvalues() is not None:
            lin_add(out, m, self.eigenvalue(m))
        else:
            names = g.torus + g.filtered
            exps = m[0] + m[1]
            for i, (v, e) in enumerate(zip(names, exps)):
                if not e:
                    continue
                img = self.action[v]
                if img.is_zero():
                    continue
                lowered = list(exps)
                lowered[i] -= 1
                rest = (tuple(lowered[: g.k]), tuple(lowered[g.k:]))
                for mi, ci in img.terms.items():
                    lin_add(out, mono_mul(rest, mi), ci * e)
        self._cache[m] = out
        return out

    def apply(self, f: Element) -> Element:
        out: dict = {}
        for m, c in f.terms.items():
            for m2, c2 in self.apply_mono(m).items():
                lin_add(out, m2, c * c2)
        return Element._wrap(f.group, out)

    __call__ = apply


def _tensor_apply_right(D: Derivation, t: dict) -> dict:
    out: dict = {}
    for (l, r), c in t.items():
        for r2, c2 in D.apply_mono(r).items():
            lin_add(out, (l, r2), c * c2)
    return out


def check_left_invariant(D: Derivation) -> bool:
    """Delta(D f) = (id (x) D) Delta(f) on every generator."""
    return not left_invariance_failures(D)


def left_invariance_failures(D: Derivation) -> list[str]:
    bad = []
    for f in D.group.generators():
        if coproduct(D(f)) != _tensor_apply_right(D, coproduct(f)):
            bad.append(str(f))
    return bad


def check_realization(L: LieAlgebra, real: Sequence[Derivation]) -> bool:
    return not realization_failures(L, real)


def realization_failures(L: LieAlgebra, real: Sequence[Derivation]) -> list[tuple]:
    if len(real) != L.n:
        raise ValueError("one derivation per basis vector")
    bad = []
    for a in range(L.n):
        for b in range(a + 1, L.n):
            for f in real[0].group.generators():
                lhs = real[a](real[b](f)) - real[b](real[a](f))
                rhs = real[0].group.zero()
                for e, c in enumerate(L.c[a][b]):
                    if c:
                        rhs = rhs + real[e](f) * c
                if lhs != rhs:
                    bad.append((L.names[a], L.names[b], str(f)))
    return bad


def derivations_commute(D1: Derivation, D2: Derivation) -> bool:
    for f in D1.group.generators():
        if D1(D2(f)) != D2(D1(f)):
            return False
    return True


# ----------------------------------------------------------------------------
# bivectors and skew forms
# ----------------------------------------------------------------------------


def _antisym(mat) -> list[list[Scalar]]:
    m = [[Scalar.coerce(v) for v in row] for row in mat]
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ValueError("matrix must be square")
        for j in range(n):
            if m[i][j] != -m[j][i]:
                raise ValueError("matrix must be antisymmetric")
    return m


@dataclass
class Bivector:
    lie: LieAlgebra
    matrix: list

    def __post_init__(self):
        self.matrix = _antisym(self.matrix)
        if len(self.matrix) != self.lie.n:
            raise ValueError("bivector size must match the Lie algebra")

    @classmethod
    def wedge(cls, lie: LieAlgebra, pairs: Sequence[tuple]) -> "Bivector":
        """sum c * (a ^ b) with a ^ b = a (x) b - b (x) a."""
        n = lie.n
        m = [[ZERO] * n for _ in range(n)]
        for c, a, b in pairs:
            i, j = lie.index(a), lie.index(b)
            c = Scalar.coerce(c)
            m[i][j] = m[i][j] + c
            m[j][i] = m[j][i] - c
        return cls(lie, m)

    def terms(self) -> list[tuple]:
        """(coefficient, a, b) with a < b for each nonzero wedge component."""
        out = []
        for i in range(self.lie.n):
            for j in range(i + 1, self.lie.n):
                if self.matrix[i][j]:
                    out.append((self.matrix[i][j], self.lie.names[i], self.lie.names[j]))
        return out

    def __str__(self):
        t = self.terms()
        if not t:
            return "0"
        parts = []
        for c, a, b in t:
            w = f"{a}∧{b}"
            if c.is_one():
                parts.append(w)
            elif c == -1:
                parts.append("-" + w)
            elif c.is_unit_term():
                parts.append(f"{c}*{w}")
            else:
                parts.append(f"({c})*{w}")
        return " + ".join(parts).replace("+ -", "- ")

    def __eq__(self, o):
        return isinstance(o, Bivector) and self.matrix == o.matrix

    def support_rank(self) -> int:
        return rank(self.matrix)


@dataclass
class SkewForm:
    """Antisymmetric form on the span of ``basis`` (vectors in Lie coordinates)."""

    lie: LieAlgebra
    basis: list
    matrix: list

    def __post_init__(self):
        self.matrix = _antisym(self.matrix) if self.matrix else []
        self.basis = [[Scalar.coerce(v) for v in b] for b in self.basis]


def cybe_tensor(r: Bivector) -> dict:
    """[r12,r13] + [r12,r23] + [r13,r23] as a dict (i, j, k) -> coefficient."""
    L = r.lie
    n = L.n
    m = r.matrix
    out: dict = {}
    nz = [(a, b, m[a][b]) for a in range(n) for b in range(n) if m[a][b]]
    for a, b, rab in nz:
        for c, d, rcd in nz:
            f = rab * rcd
            for e, v in enumerate(L.c[a][c]):  # [e_a, e_c] (x) e_b (x) e_d
                if v:
                    lin_add(out, (e, b, d), f * v)
            for e, v in enumerate(L.c[b][c]):  # e_a (x) [e_b, e_c] (x) e_d
                if v:
                    lin_add(out, (a, e, d), f * v)
            for e, v in enumerate(L.c[b][d]):  # e_a (x) e_c (x) [e_b, e_d]
                if v:
                    lin_add(out, (a, c, e), f * v)
    return out


def cybe_check(r: Bivector) -> tuple[bool, dict]:
    t = cybe_tensor(r)
    names = r.lie.names
    violation = {"⊗".join(names[i] for i in key): v for key, v in sorted(t.items())}
    return (not t, violation)


def _coords(basis_rref: list, pivots: list, v: Sequence) -> list[Scalar] | None:
    """Coordinates of v in an RREF row basis, or None when v is outside the span."""
    coeffs = [v[p] for p in pivots]
    recon = [ZERO] * len(v)
    for c, row in zip(coeffs, basis_rref):
        if c:
            recon = [x + c * y for x, y in zip(recon, row)]
    if any(x != y for x, y in zip(recon, v)):
        return None
    return coeffs


def symplectic_check(w: SkewForm, L: LieAlgebra | None = None) -> dict:
    """Rank of the form and whether it satisfies the Lie 2-cocycle identity.

    Brackets that leave the span of ``w.basis`` make the cocycle check fail.
    """
    L = L or w.lie
    rk = rank(w.matrix) if w.matrix else 0
    basis, piv = rref(w.basis) if w.basis else ([], [])
    s = len(w.basis)
    # express the form in the RREF basis so brackets can be read off
    if s:
        # change of basis: original basis rows = C * rref rows
        C = [_coords(basis, piv, b) for b in w.basis]
        Cinv = inverse(C)
        om = matmul(matmul(Cinv, w.matrix), transpose(Cinv))
    else:
        om = []
    ok = True
    for i in range(s):
        for j in range(s):
            for k in range(s):
                total = ZERO
                for (p, q, t) in ((i, j, k), (k, i, j), (j, k, i)):
                    br = L.bracket_vec(basis[p], basis[q])
                    co = _coords(basis, piv, br)
                    if co is None:
                        ok = False
                        break
                    for a, ca in enumerate(co):
                        if ca and om[a][t]:
                            total = total + ca * om[a][t]
                if not ok:
                    break
                if total:
                    ok = False
                    break
    return {"rank": rk, "is_2cocycle": ok}


def invert_bivector(r: Bivector) -> SkewForm:
    """omega = (r restricted to its row span)^{-1}, on the RREF basis of the span."""
    basis, piv = rref(r.matrix)
    if not piv:
        return SkewForm(r.lie, [], [])
    rho = [[r.matrix[i][j] for j in piv] for i in piv]
    return SkewForm(r.lie, basis, inverse(rho))


def invert_skewform(w: SkewForm) -> Bivector:
    """The bivector B^T omega^{-1} B, inverse of :func:`invert_bivector`."""
    n = w.lie.n
    if not w.basis:
        return Bivector(w.lie, [[ZERO] * n for _ in range(n)])
    rho = inverse(w.matrix)
    B = w.basis
    return Bivector(w.lie, matmul(matmul(transpose(B), rho), B))


def support_basis(r: Bivector) -> list[list[Scalar]]:
    return rref(r.matrix)[0]


# ----------------------------------------------------------------------------
# decomposition over a torus / unipotent split
# ----------------------------------------------------------------------------


@dataclass
class CybeDecomposition:
    s: Bivector
    w: list  # (t name, u vector over the full basis)
    r_u: Bivector
    conditions: list = field(default_factory=list)  # (t name, passes)

    def w_str(self) -> str:
        L = self.s.lie
        parts = []
        for t, vec in self.w:
            u = " + ".join(
                (n if c.is_one() else f"{c}*{n}") for n, c in zip(L.names, vec) if c
            )
            if "+" in u:
                u = f"({u})"
            parts.append(f"{t}⊗{u}")
        return " + ".join(parts) or "0"

    def reassemble(self) -> Bivector:
        L = self.s.lie
        m = [[self.s.matrix[i][j] + self.r_u.matrix[i][j] for j in range(L.n)] for i in range(L.n)]
        for t, vec in self.w:
            i = L.index(t)
            for j, c in enumerate(vec):
                if c:
                    m[i][j] = m[i][j] + c
                    m[j][i] = m[j][i] - c
        return Bivector(L, m)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.conditions)


def _adjoint_on_bivector(L: LieAlgebra, u: Sequence, r: Bivector) -> list[list[Scalar]]:
    """[u (x) 1 + 1 (x) u, r] as a matrix."""
    n = L.n
    out = [[ZERO] * n for _ in range(n)]
    for c in range(n):
        for d in range(n):
            rcd = r.matrix[c][d]
            if not rcd:
                continue
            uc = L.bracket_vec(u, L.basis_vec(c))
            ud = L.bracket_vec(u, L.basis_vec(d))
            for e in range(n):
                if uc[e]:
                    out[e][d] = out[e][d] + rcd * uc[e]
                if ud[e]:
                    out[c][e] = out[c][e] + rcd * ud[e]
    return out


def prop54_decompose(r: Bivector, torus: Sequence[str], unipotent: Sequence[str],
                     strict: bool = False) -> CybeDecomposition:
    """Split r = s + (w - w_21) + r_u along a torus/unipotent basis partition.

    Each ``u_i`` (the unipotent partner of a torus basis vector) is checked to
    commute with r_u under the adjoint action.  With ``strict`` a failing
    condition raises :class:`CentralizerViolation`.
    """
    L = r.lie
    ti = [L.index(t) for t in torus]
    ui = [L.index(u) for u in unipotent]
    if sorted(ti + ui) != list(range(L.n)):
        raise NotBlockDecomposable("torus and unipotent names must partition the basis")
    if not L.is_abelian_on(ti):
        raise NotBlockDecomposable("torus part is not abelian")
    if any(any(L.c[a][b]) for a in ti for b in ui):
        raise NotBlockDecomposable("torus and unipotent parts do not commute")
    n = L.n
    s = [[r.matrix[i][j] if (i in ti and j in ti) else ZERO for j in range(n)] for i in range(n)]
    ru = [[r.matrix[i][j] if (i in ui and j in ui) else ZERO for j in range(n)] for i in range(n)]
    ru_b = Bivector(L, ru)
    w = []
    conds = []
    for i in ti:
        vec = [r.matrix[i][j] if j in ui else ZERO for j in range(n)]
        if not any(vec):
            continue
        w.append((L.names[i], vec))
        ad = _adjoint_on_bivector(L, vec, ru_b)
        ok = not any(v for row in ad for v in row)
        conds.append((L.names[i], ok))
        if strict and not ok:
            raise CentralizerViolation(L.names[i])
    return CybeDecomposition(Bivector(L, s), w, ru_b, conds)
