from itertools import combinations
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopftwist.analysis import (
    ModeUnsupported,
    center_upto,
    hnf_rows,
    integer_kernel,
    lattice_factors,
    oracle_central,
    simplicity_verdict,
    snf,
    structure_report,
    support_report,
    torus_support,
)
from hopftwist.builtins import builtin, builtin_raw
from hopftwist.documents import build
from hopftwist.scalars import Scalar
from hopftwist.twistalg import TwistedAlgebra

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def det(A):
    return int(sympy.Matrix(A).det())


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_properties(A):
    res = snf(A)
    assert matmul(matmul(res.U, A), res.V) == res.D
    assert abs(det(res.U)) == 1
    assert abs(det(res.V)) == 1
    m, n = len(A), len(A[0])
    for i in range(m):
        for j in range(n):
            if i != j:
                assert res.D[i][j] == 0
    f = res.factors
    assert all(v >= 0 for v in f)
    for a, b in zip(f, f[1:]):
        assert (b % a == 0) if a else b == 0


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(A):
    # d_1 ... d_i = gcd of the i x i minors
    M = sympy.Matrix(A)
    f = snf(A).factors
    prod = 1
    for i, d in enumerate(f, start=1):
        prod *= d
        minors = [M.extract(list(r), list(c)).det()
                  for r in _subsets(M.rows, i) for c in _subsets(M.cols, i)]
        g = 0
        for x in minors:
            g = gcd(g, int(x))
        assert prod == g


def _subsets(n, k):
    return combinations(range(n), k)


def test_snf_examples():
    assert snf([[2, 4], [6, 8]]).factors == [2, 4]
    assert snf([[0, 1], [-1, 0]]).factors == [1, 1]
    assert snf([[3, 0], [0, 3]]).factors == [3, 3]


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_integer_kernel_is_saturated(A):
    n = len(A[0])
    kern = integer_kernel(A, n)
    for v in kern:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in A)
    # the rank is complementary, and Z^n / kernel is torsion free
    rank = sympy.Matrix(A).rank()
    assert len(kern) == n - rank
    if kern:
        assert lattice_factors(kern, n) == [0] * rank
        assert [f for f in snf(kern).factors if f] == [1] * len(kern)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4))
def test_hnf_is_canonical(rows):
    h = hnf_rows(rows, 3)
    assert hnf_rows(h, 3) == h
    # permuting and combining generators leaves the lattice unchanged
    mixed = [list(r) for r in reversed(rows)] + [[a + b for a, b in zip(rows[0], rows[-1])]]
    assert hnf_rows(mixed, 3) == h


def test_cyclotomic_torus_support():
    doc = builtin("quantum-torus-cyclotomic")
    sup = support_report(doc.cocycle)
    assert sup.torus.factors == [3, 3]
    assert sup.gamma == [[3, 0], [0, 3]]
    assert not sup.full


def test_torus_support_of_generic_and_mixed_units():
    one = Scalar.coerce(1)
    q = Scalar.exp({"t": 2})
    sup = torus_support([[one, q], [q.inverse(), one]])
    assert (sup.gamma, sup.factors, sup.dim_s) == ([], [0, 0], 2)
    z = Scalar.zeta(4)
    sup = torus_support([[one, z * q], [(z * q).inverse(), one]])
    assert sup.gamma == []
    sup = torus_support([[one, z], [z.inverse(), one]])
    assert (sup.gamma, sup.factors, sup.component_order) == ([[4, 0], [0, 4]], [4, 4], 16)


def test_generic_centers_are_constants(docs):
    for name in ("quantum-torus", "moyal", "mixed-nilpotent"):
        alg = TwistedAlgebra(docs[name].cocycle)
        cb = center_upto(alg, 4 if name != "moyal" else 6, 4 if name != "mixed-nilpotent" else 2)
        assert cb.constants_only, name
        assert all(cb.verified)
        assert cb.matches_prediction
        assert simplicity_verdict(alg).simple == "simple"


def test_heisenberg_center():
    alg = TwistedAlgebra(builtin("heisenberg").cocycle)
    cb = center_upto(alg, 4, 4)
    assert [str(e) for e in cb.elements] == ["1", "x", "x^2", "x^3", "x^4"]
    assert all(cb.verified)
    assert cb.matches_prediction
    assert simplicity_verdict(alg).simple == "not simple"
    rep = structure_report(alg, cb)
    assert (rep.verdict, rep.model) == ("WeylTensorPoly", "W(1)⊗poly[x]")
    assert support_report(alg.J).dim_v == 2


def test_cyclotomic_center_is_the_index_three_lattice():
    alg = TwistedAlgebra(builtin("quantum-torus-cyclotomic").cocycle)
    cb = center_upto(alg, 3, 4)
    exps = sorted(tuple(w[0]) for e in cb.elements for w in e.terms)
    assert exps == sorted((a, b) for a in (-3, 0, 3) for b in (-3, 0, 3))
    assert all(len(e.terms) == 1 for e in cb.elements)
    assert all(cb.verified)
    assert cb.matches_prediction


def test_oracle_rejects_noncentral_elements():
    doc = builtin("heisenberg")
    g = doc.group
    assert oracle_central(doc.cocycle, g.var("x") ** 2 + 3)
    assert not oracle_central(doc.cocycle, g.var("y"))
    assert not oracle_central(doc.cocycle, g.var("z") + g.var("x"))


def test_structure_verdicts(docs):
    expected = {
        "moyal": ("WeylTensorPoly", "W(1)"),
        "heisenberg": ("WeylTensorPoly", "W(1)⊗poly[x]"),
        "quantum-torus": ("QuantumTorus", "E(λ) on x, y"),
        "mixed-nilpotent": ("CrossedProduct", "(poly[z]) #_J C[x^±1, y^±1]"),
    }
    for name, (verdict, model) in expected.items():
        rep = structure_report(TwistedAlgebra(docs[name].cocycle))
        assert (rep.verdict, rep.model) == (verdict, model), name
    borel = structure_report(TwistedAlgebra(docs["borel"].cocycle))
    assert borel.verdict == "Undetermined" and borel.simple == "undetermined"


def test_support_needs_strict_mode():
    with pytest.raises(ModeUnsupported):
        support_report(builtin("borel").cocycle)


def test_mixed_support_is_full_for_generic_h():
    sup = support_report(builtin("mixed-nilpotent").cocycle)
    assert sup.full
    assert (sup.dim_h, sup.dim_v, sup.gamma) == (3, 1, [])


def test_degenerate_torus_twist_has_a_center():
    raw = builtin_raw("quantum-torus")
    raw["cocycle"]["r"] = []
    doc = build(raw)
    alg = TwistedAlgebra(doc.cocycle)
    cb = center_upto(alg, 0, 1)
    assert cb.dimension == 9
    assert simplicity_verdict(alg).simple == "not simple"
