from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
import sympy

from hopftwist.builtins import builtin, builtin_names
from hopftwist.scalars import Cyclo, Scalar


def evaluate(s: Scalar, values: dict) -> Fraction:
    """Exact value of a rational-coefficient scalar at rational parameter values.

    ``values`` maps parameter names to Fractions and ``("exp", name)`` to the
    value substituted for exp(name); exponent forms must be integral.
    """
    num, den = s.numerator_denominator()

    def poly(p: Scalar) -> Fraction:
        total = Fraction(0)
        for (pm, ef), c in p.terms():
            assert not isinstance(c, Cyclo)
            v = Fraction(c)
            for name, e in pm:
                v *= values[name] ** e
            for name, e in ef:
                assert Fraction(e).denominator == 1
                v *= values[("exp", name)] ** int(e)
            total += v
        return total

    return poly(num) / poly(den)


def borel_series_oracle(a, b, c, d, h):
    """sum_n h^n/n! eps(X(X-1)...(X-n+1) x^a y^b) eps(Y^n x^c y^d), summed term by term in sympy.

    X = x d/dx + y d/dy and Y = d/dy; eps evaluates at x = 1, y = 0.  The
    series stops because Y^n kills y^d once n > d.
    """
    x, y = sympy.symbols("x y")
    left, right = x**a * y**b, x**c * y**d
    hh = sympy.Rational(h.numerator, h.denominator)
    total = sympy.Rational(0)
    for n in range(d + 1):
        total += hh**n / factorial(n) * left.subs({x: 1, y: 0}) * right.subs({x: 1, y: 0})
        left = sympy.expand(x * sympy.diff(left, x) + y * sympy.diff(left, y) - n * left)
        right = sympy.diff(right, y)
    return Fraction(int(sympy.numer(total)), int(sympy.denom(total)))


@pytest.fixture(scope="session")
def docs():
    return {name: builtin(name) for name in builtin_names()}
