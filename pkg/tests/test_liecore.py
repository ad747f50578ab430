import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopftwist.analysis import unipotent_support
from hopftwist.builtins import builtin
from hopftwist.liecore import (
    Bivector,
    CentralizerViolation,
    LieAlgebra,
    NotBlockDecomposable,
    check_jacobi,
    check_left_invariant,
    check_realization,
    cybe_check,
    invert_bivector,
    invert_skewform,
    prop54_decompose,
    symplectic_check,
)
from hopftwist.linalg import rank
from hopftwist.scalars import Scalar

small = st.integers(-3, 3)


def heisenberg():
    return LieAlgebra(["X", "Y", "Z"], {("X", "Y"): {"Z": 1}})


def affine2():
    # aff(1) + aff(1): [A, B] = B, [C, D] = D
    return LieAlgebra(["A", "B", "C", "D"], {("A", "B"): {"B": 1}, ("C", "D"): {"D": 1}})


def random_bivector(L, entries):
    n = L.n
    pairs = []
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((next(it), L.names[i], L.names[j]))
    return Bivector.wedge(L, pairs)


def test_cybe_on_heisenberg():
    L = heisenberg()
    ok, witness = cybe_check(Bivector.wedge(L, [(1, "X", "Y")]))
    assert not ok
    assert witness
    ok, witness = cybe_check(Bivector.wedge(L, [(1, "X", "Z")]))
    assert ok and not witness
    assert cybe_check(Bivector.wedge(L, [(1, "Z", "Y")]))[0]


def test_abelian_algebra_accepts_every_bivector():
    L = LieAlgebra(["a", "b", "c", "d"])
    r = Bivector.wedge(L, [(2, "a", "b"), (-1, "a", "d"), (5, "c", "b")])
    assert cybe_check(r)[0]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["heisenberg", "affine2"]), st.lists(small, min_size=6, max_size=6))
def test_cybe_iff_support_subalgebra_with_closed_form(which, entries):
    # r solves the CYBE exactly when its image is a subalgebra on which r^{-1} is a 2-cocycle
    L = heisenberg() if which == "heisenberg" else affine2()
    r = random_bivector(L, entries)
    omega = invert_bivector(r)
    closed = symplectic_check(omega, L)["is_2cocycle"] if omega.basis else True
    assert cybe_check(r)[0] == closed


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4),
       st.integers(1, 4))
def test_invert_is_an_involution_on_rank_two(u, v, n):
    L = LieAlgebra(["a", "b", "c", "d"])
    m = [[Scalar.coerce(u[i] * v[j] - u[j] * v[i]) for j in range(4)] for i in range(4)]
    r = Bivector(L, [[c * n for c in row] for row in m])
    if r.support_rank() == 0:
        return
    assert r.support_rank() == 2
    assert invert_skewform(invert_bivector(r)) == r


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=10, max_size=10))
def test_support_dimension_is_even(entries):
    L = LieAlgebra(["a", "b", "c", "d", "e"])
    r = random_bivector(L, entries)
    sup = unipotent_support(r)
    assert sup.even
    assert sup.dim_v == rank(r.matrix)
    if sup.dim_v:
        assert invert_skewform(sup.omega) == r


def test_builtin_supports_are_even(docs):
    for doc in docs.values():
        r = doc.bivector()
        if r is not None:
            assert unipotent_support(r).even


def test_mixed_decomposition():
    doc = builtin("mixed-nilpotent")
    torus, unip = doc.split
    dec = prop54_decompose(doc.bivector(), torus, unip, strict=True)
    L = doc.lie
    assert dec.s == Bivector.wedge(L, [(Scalar.param("h"), "X", "Y")])
    assert dec.w_str() == "X⊗Z"
    assert dec.r_u.support_rank() == 0
    assert dec.all_pass
    assert dec.reassemble() == doc.bivector()


def test_decomposition_reports_centralizer_failure():
    # u = Y moves r_u = Z^V to W^V when [Y, Z] = W
    L = LieAlgebra(["T", "Y", "Z", "V", "W"], {("Y", "Z"): {"W": 1}})
    r = Bivector.wedge(L, [(1, "T", "Y"), (1, "Z", "V")])
    dec = prop54_decompose(r, ["T"], ["Y", "Z", "V", "W"])
    assert dec.conditions == [("T", False)]
    with pytest.raises(CentralizerViolation):
        prop54_decompose(r, ["T"], ["Y", "Z", "V", "W"], strict=True)


def test_decomposition_needs_a_partition():
    doc = builtin("mixed-nilpotent")
    with pytest.raises(NotBlockDecomposable):
        prop54_decompose(doc.bivector(), ["X"], ["Z"])


def test_jacobi_and_realizations(docs):
    assert check_jacobi(heisenberg())
    bad = LieAlgebra(["a", "b", "c"], {("a", "b"): {"c": 1}, ("b", "c"): {"a": 1}, ("c", "a"): {"a": 1}})
    assert not check_jacobi(bad)
    for doc in docs.values():
        if doc.lie is not None:
            assert check_jacobi(doc.lie)
            assert check_realization(doc.lie, doc.derivations)
            assert all(check_left_invariant(D) for D in doc.derivations)
