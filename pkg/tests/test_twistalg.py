import random
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from hopftwist.builtins import builtin, builtin_raw
from hopftwist.documents import build
from hopftwist.hopfmodel import coproduct, lin_add, mono_mul
from hopftwist.twistalg import (
    TwistedAlgebra,
    iterated_twisted_product,
    left_twisted_product,
    twisted_hopf_product,
    twisted_product,
    verify_presentation,
)

EXPECTED_RELATIONS = {
    "borel": ["x·y = (y + h)·x"],
    "heisenberg": ["y·x = x·y", "z·x = x·z", "z·y − y·z = 1"],
    "mixed-nilpotent": ["x·y = exp(h)·y·x", "x·z = (z + 1)·x", "y·z = z·y"],
    "moyal": ["x·y − y·x = 1"],
    "quantum-torus": ["x·y = exp(2*t)·y·x"],
    "quantum-torus-cyclotomic": ["x·y = zeta^2·y·x"],
}

_ALGS = {}


def alg_for(name):
    if name not in _ALGS:
        _ALGS[name] = TwistedAlgebra(builtin(name).cocycle)
    return _ALGS[name]


def letters_of(g):
    out = [("x", i, e) for i in range(g.k) for e in (1, -1)]
    out += [("z", j, 1) for j in range(g.m)]
    return out


def test_presentations(docs):
    assert set(EXPECTED_RELATIONS) == set(docs)
    for name in docs:
        alg = alg_for(name)
        assert [r["text"] for r in alg.P.relations(alg)] == EXPECTED_RELATIONS[name]
        assert all(ok for _, ok in verify_presentation(alg, alg.P)), name


def test_extended_mode_presentation_comes_from_the_oracle():
    assert alg_for("borel").P.route == "twisted-product"
    assert alg_for("moyal").P.route == "formula"


def test_normal_form_agrees_with_oracle_on_short_words(docs):
    for name, doc in docs.items():
        alg = alg_for(name)
        J = doc.cocycle
        for n in range(5):
            for word in product(letters_of(doc.group), repeat=n):
                nf = alg.normal_form(word)
                assert nf.expand() == iterated_twisted_product(J, word), (name, word)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(EXPECTED_RELATIONS)), st.data())
def test_normal_form_is_compatible_with_concatenation(name, data):
    alg = alg_for(name)
    letters = letters_of(alg.g)
    u = data.draw(st.lists(st.sampled_from(letters), max_size=4))
    v = data.draw(st.lists(st.sampled_from(letters), max_size=4))
    assert alg.normal_form(u) * alg.normal_form(v) == alg.normal_form(u + v)


def test_inverse_letters_cancel(docs):
    for name in docs:
        alg = alg_for(name)
        for i in range(alg.g.k):
            for pair in ([("x", i, 1), ("x", i, -1)], [("x", i, -1), ("x", i, 1)]):
                assert alg.normal_form(pair) == alg.word(alg.unit_word)


def random_element(g, rng):
    mons = g.monomials(2, 1)
    f = g.zero()
    for _ in range(rng.randint(1, 3)):
        f = f + g.mono(rng.choice(mons), rng.randint(-3, 3))
    return f


def test_twisted_product_associativity_on_random_triples(docs):
    rng = random.Random(20261017)
    names = sorted(docs)
    for k in range(200):
        J = docs[names[k % len(names)]].cocycle
        g = J.group
        a, b, c = (random_element(g, rng) for _ in range(3))
        assert twisted_product(twisted_product(a, b, J), c, J) == twisted_product(a, twisted_product(b, c, J), J)


def test_left_and_hopf_products_are_associative(docs):
    rng = random.Random(7)
    for doc in docs.values():
        J = doc.cocycle
        g = J.group
        for _ in range(5):
            a, b, c = (random_element(g, rng) for _ in range(3))
            for prod in (left_twisted_product, twisted_hopf_product):
                assert prod(prod(a, b, J), c, J) == prod(a, prod(b, c, J), J)


def test_coproduct_is_a_coaction_on_the_twisted_algebra(docs):
    # Delta(m_J(f, g)) = sum f1 g1 (x) m_J(f2, g2)
    rng = random.Random(11)
    for name, doc in docs.items():
        J = doc.cocycle
        g = J.group
        for _ in range(5):
            f, h = random_element(g, rng), random_element(g, rng)
            lhs = coproduct(twisted_product(f, h, J))
            rhs: dict = {}
            for (f1, f2), c1 in coproduct(f).items():
                for (h1, h2), c2 in coproduct(h).items():
                    right = twisted_product(g.mono(f2), g.mono(h2), J)
                    for m, v in right.terms.items():
                        lin_add(rhs, (mono_mul(f1, h1), m), c1 * c2 * v)
            assert lhs == rhs, name


def test_unit_is_preserved(docs):
    for doc in docs.values():
        J = doc.cocycle
        g = J.group
        for m in g.monomials(2, 1):
            f = g.mono(m)
            assert twisted_product(g.one(), f, J) == f
            assert twisted_product(f, g.one(), J) == f


def test_moyal_in_xy_order():
    raw = builtin_raw("moyal")
    raw["group"]["filtered"] = ["x", "y"]
    alg = TwistedAlgebra(build(raw).cocycle)
    yx = alg.normal_form([("z", 1, 1), ("z", 0, 1)])
    assert str(yx) == "x·y − 1"
    assert [r["text"] for r in alg.P.relations(alg)] == ["y·x − x·y = -1"]


def test_mixed_z_past_x():
    alg = alg_for("mixed-nilpotent")
    zx = alg.normal_form([("z", 0, 1), ("x", 0, 1)])
    assert str(zx) == "x·z − x"


def test_twisted_algebra_of_heisenberg_has_central_x():
    alg = alg_for("heisenberg")
    x = alg.generator("x")
    for gen in alg.generators():
        assert alg.commutator(x, gen).is_zero()
    y, z = alg.generator("y"), alg.generator("z")
    assert str(alg.commutator(z, y)) == "1"
