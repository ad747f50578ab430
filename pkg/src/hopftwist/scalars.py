"""Exact coefficients: exponential polynomials over cyclotomic fields.

A :class:`Scalar` is a quotient of two finite sums

    sum  c * p_1^{m_1} ... p_s^{m_s} * exp(l_1 p_1 + ... + l_s p_s + l_0)

where ``c`` lies in Q(zeta_N), the ``m_i`` are integers and the ``l_i`` are
rationals.  Declared parameters stand for generic nonzero complex numbers,
so parameter monomials are units and distinct exponentials are linearly
independent.  Under that genericity assumption equality is decidable and
every nonzero scalar is invertible.

Numerators and denominators are kept coprime with the denominator's leading
term normalised to 1, which makes the representation canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from sympy import QQ, cyclotomic_poly, symbols
from sympy.polys.rings import ring


class DivisionByZero(ZeroDivisionError):
    pass


# ----------------------------------------------------------------------------
# cyclotomic coefficients
# ----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclo_data(n: int):
    """(phi, table) where table[j] is zeta_n^j in the power basis, 0 <= j < n."""
    x = symbols("x")
    poly = [Fraction(int(c)) for c in cyclotomic_poly(n, x, polys=True).all_coeffs()]
    phi = len(poly) - 1
    # zeta^phi = -(poly[1] zeta^{phi-1} + ... + poly[phi])
    table = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(n):
        table.append(tuple(cur))
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(phi):
                nxt[i] -= top * poly[phi - i]
        cur = nxt
    return phi, tuple(table)


class Cyclo:
    """Element of Q(zeta_n) written in the power basis 1, zeta, ..., zeta^{phi-1}."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, c: tuple):
        self.n = n
        self.c = c

    @staticmethod
    def make(n: int, c) -> Union["Cyclo", Fraction]:
        c = tuple(Fraction(v) for v in c)
        if not any(c[1:]):
            return c[0]
        return Cyclo(n, c)

    @staticmethod
    def zeta_power(n: int, k: int) -> Union["Cyclo", Fraction]:
        _, table = _cyclo_data(n)
        return Cyclo.make(n, table[k % n])

    def vector(self) -> tuple:
        return self.c

    def __eq__(self, other):
        return isinstance(other, Cyclo) and self.n == other.n and self.c == other.c

    def __hash__(self):
        return hash((self.n, self.c))

    def __repr__(self):
        return f"Cyclo({self.n}, {self.c})"

    def conjugate(self, k: int) -> Union["Cyclo", Fraction]:
        """Image under the Galois automorphism zeta -> zeta^k."""
        phi, table = _cyclo_data(self.n)
        out = [Fraction(0)] * phi
        for i, a in enumerate(self.c):
            if a:
                for j, t in enumerate(table[(i * k) % self.n]):
                    if t:
                        out[j] += a * t
        return Cyclo.make(self.n, out)


def _as_vec(a, n):
    if isinstance(a, Cyclo):
        if a.n != n:
            raise ValueError(f"cannot mix cyclotomic orders {a.n} and {n}")
        return a.c
    phi, _ = _cyclo_data(n)
    return (a,) + (Fraction(0),) * (phi - 1)


def _cadd(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    n = a.n if isinstance(a, Cyclo) else b.n
    va, vb = _as_vec(a, n), _as_vec(b, n)
    return Cyclo.make(n, [x + y for x, y in zip(va, vb)])


def _cneg(a):
    if isinstance(a, Fraction):
        return -a
    return Cyclo(a.n, tuple(-v for v in a.c))


def _cmul(a, b):
    if isinstance(a, Fraction):
        if isinstance(b, Fraction):
            return a * b
        return Cyclo.make(b.n, [a * v for v in b.c]) if a else Fraction(0)
    if isinstance(b, Fraction):
        return Cyclo.make(a.n, [b * v for v in a.c]) if b else Fraction(0)
    n = a.n
    if b.n != n:
        raise ValueError(f"cannot mix cyclotomic orders {a.n} and {b.n}")
    phi, table = _cyclo_data(n)
    conv = [Fraction(0)] * (2 * phi - 1)
    for i, x in enumerate(a.c):
        if x:
            for j, y in enumerate(b.c):
                if y:
                    conv[i + j] += x * y
    out = list(conv[:phi])
    for p in range(phi, 2 * phi - 1):
        if conv[p]:
            for j, t in enumerate(table[p % n]):
                if t:
                    out[j] += conv[p] * t
    return Cyclo.make(n, out)


def _cinv(a):
    if isinstance(a, Fraction):
        if not a:
            raise DivisionByZero("division by zero")
        return 1 / a
    # product of the nontrivial conjugates is a / norm(a) up to the norm
    n = a.n
    prod = Fraction(1)
    for k in range(2, n):
        if gcd(k, n) == 1:
            prod = _cmul(prod, a.conjugate(k))
    norm = _cmul(prod, a)
    assert isinstance(norm, Fraction) and norm != 0
    return _cmul(prod, 1 / norm)


def _cstr(a) -> str:
    if isinstance(a, Fraction):
        return str(a)
    parts = []
    for i in reversed(range(len(a.c))):
        v = a.c[i]
        if not v:
            continue
        mono = "" if i == 0 else ("zeta" if i == 1 else f"zeta^{i}")
        if not mono:
            parts.append(str(v))
        elif v == 1:
            parts.append(mono)
        elif v == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{v}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


# ----------------------------------------------------------------------------
# keys: (parameter monomial, exponential linear form)
# ----------------------------------------------------------------------------

ONE_KEY = ((), ())
# name reserved for the constant part of an exponent: exp(c) with c rational
CONST = ""


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, v in b:
        s = d.get(k, 0) + v
        if s:
            d[k] = s
        else:
            d.pop(k, None)
    return tuple(sorted(d.items()))


@lru_cache(maxsize=1 << 16)
def _kmul(k1, k2):
    return (_merge(k1[0], k2[0]), _merge(k1[1], k2[1]))


@lru_cache(maxsize=1 << 14)
def _kinv(k):
    return (tuple((n, -e) for n, e in k[0]), tuple((n, -e) for n, e in k[1]))


def _kscale_exp(k, s):
    return (k[0], tuple((n, e * s) for n, e in k[1]))


# polynomial helpers on dict[key, coeff]


def _padd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        if sign < 0:
            v = _cneg(v)
        if k in out:
            s = _cadd(out[k], v)
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = v
    return out


def _pmul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = _kmul(k1, k2)
            v = _cmul(v1, v2)
            if k in out:
                s = _cadd(out[k], v)
                if s:
                    out[k] = s
                else:
                    del out[k]
            elif v:
                out[k] = v
    return out


def _pscale(a: dict, key, c) -> dict:
    out = {}
    for k, v in a.items():
        w = _cmul(v, c)
        if w:
            out[_kmul(k, key)] = w
    return out


def _cyclo_order(*polys) -> int | None:
    for p in polys:
        for v in p.values():
            if isinstance(v, Cyclo):
                return v.n
    return None


def _galois_conj(p: dict, k: int) -> dict:
    out = {}
    for key, v in p.items():
        w = v.conjugate(k) if isinstance(v, Cyclo) else v
        if w:
            out[key] = w
    return out


def _reduce_fraction(num: dict, den: dict) -> tuple[dict, dict | None]:
    """Cancel common factors and normalise the denominator's leading term."""
    if not num:
        return {}, None
    if len(den) == 1:
        (k, c), = den.items()
        return _pscale(num, _kinv(k), _cinv(c)), None
    n = _cyclo_order(den)
    if n is not None:
        conj: dict = {ONE_KEY: Fraction(1)}
        for k in range(2, n):
            if gcd(k, n) == 1:
                conj = _pmul(conj, _galois_conj(den, k))
        num = _pmul(num, conj)
        den = _pmul(den, conj)
        assert _cyclo_order(den) is None
    num, den = _sympy_cancel(num, den)
    if len(den) == 1:
        (k, c), = den.items()
        return _pscale(num, _kinv(k), _cinv(c)), None
    # fix the remaining unit ambiguity: the denominator gets the smallest
    # exponents zero in every symbol and leading coefficient 1
    low: dict = {}
    for part in (0, 1):
        names = {n for key in den for n, _ in key[part]}
        for n in names:
            low[(part, n)] = min(dict(key[part]).get(n, 0) for key in den)
    shift = (
        tuple(sorted((n, -e) for (part, n), e in low.items() if part == 0 and e)),
        tuple(sorted((n, -e) for (part, n), e in low.items() if part == 1 and e)),
    )
    num = _pscale(num, shift, Fraction(1))
    den = _pscale(den, shift, Fraction(1))
    inv_c = _cinv(den[max(den)])
    return _pscale(num, ONE_KEY, inv_c), _pscale(den, ONE_KEY, inv_c)


def _sympy_cancel(num: dict, den: dict) -> tuple[dict, dict]:
    params: set = set()
    exps: dict = {}
    zn = _cyclo_order(num)
    for p in (num, den):
        for pm, ef in p:
            params.update(name for name, _ in pm)
            for name, e in ef:
                exps[name] = lcm(exps.get(name, 1), e.denominator)
    pnames = sorted(params)
    enames = sorted(exps)
    nv = len(pnames) + len(enames) + (1 if zn else 0)
    pidx = {name: i for i, name in enumerate(pnames)}
    eidx = {name: len(pnames) + i for i, name in enumerate(enames)}

    def vec(key):
        v = [0] * nv
        for name, e in key[0]:
            v[pidx[name]] = e
        for name, e in key[1]:
            v[eidx[name]] = int(e * exps[name])
        return v

    def to_dict(p):
        out = {}
        for key, c in p.items():
            v = vec(key)
            if isinstance(c, Cyclo):
                for i, a in enumerate(c.c):
                    if a:
                        w = list(v)
                        w[-1] = i
                        out[tuple(w)] = QQ(a.numerator, a.denominator)
            else:
                out[tuple(v)] = QQ(c.numerator, c.denominator)
        return out

    dn, dd = to_dict(num), to_dict(den)
    shift = [0] * nv
    for d in (dn, dd):
        for mono in d:
            for i, e in enumerate(mono):
                shift[i] = min(shift[i], e)
    dn = {tuple(e - s for e, s in zip(m, shift)): c for m, c in dn.items()}
    dd = {tuple(e - s for e, s in zip(m, shift)): c for m, c in dd.items()}
    names = [f"p{i}" for i in range(nv)] or ["p0"]
    R, *_ = ring(",".join(names), QQ)
    if nv == 0:
        return num, den
    fn, fd = R.from_dict(dn), R.from_dict(dd)
    _, fn, fd = fn.cofactors(fd)

    def back(f):
        out: dict = {}
        for mono, c in f.terms():
            pm = tuple((name, mono[pidx[name]]) for name in pnames if mono[pidx[name]])
            ef = tuple(
                (name, Fraction(mono[eidx[name]], exps[name]))
                for name in enames
                if mono[eidx[name]]
            )
            coeff = Fraction(int(c.numerator), int(c.denominator))
            if zn:
                coeff = _cmul(coeff, Cyclo.zeta_power(zn, mono[-1]))
            key = (pm, ef)
            out[key] = _cadd(out[key], coeff) if key in out else coeff
        return {k: v for k, v in out.items() if v}

    return back(fn), back(fd)


# ----------------------------------------------------------------------------
# Scalar
# ----------------------------------------------------------------------------


class Scalar:
    """Exact coefficient; immutable, hashable, canonical."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Mapping | None = None, den: Mapping | None = None):
        num = {k: v for k, v in (num or {}).items() if v}
        if den is not None:
            den = {k: v for k, v in den.items() if v}
            if not den:
                raise DivisionByZero("zero denominator")
            num, den = _reduce_fraction(num, den)
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: dict, den: dict | None = None) -> "Scalar":
        s = object.__new__(cls)
        s._num = num
        s._den = den
        s._hash = None
        return s

    # constructors ---------------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            return cls._raw({ONE_KEY: x} if x else {})
        if isinstance(x, Cyclo):
            return cls._raw({ONE_KEY: x})
        if isinstance(x, ExpUnit):
            return x.to_scalar()
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def param(cls, name: str, power: int = 1) -> "Scalar":
        return cls._raw({(((name, power),), ()): Fraction(1)})

    @classmethod
    def exp(cls, form: Mapping[str, Fraction]) -> "Scalar":
        ef = tuple(sorted((k, Fraction(v)) for k, v in form.items() if v))
        return cls._raw({((), ef): Fraction(1)})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Scalar":
        return cls.coerce(Cyclo.zeta_power(n, k))

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_one(self) -> bool:
        return self._den is None and self._num == {ONE_KEY: Fraction(1)}

    def is_rational(self) -> bool:
        return self._den is None and (not self._num or (
            len(self._num) == 1 and ONE_KEY in self._num
            and isinstance(self._num[ONE_KEY], Fraction)))

    def is_unit_term(self) -> bool:
        """True when the scalar is a single nonzero term (invertible without gcd)."""
        return self._den is None and len(self._num) == 1

    def to_fraction(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._num[ONE_KEY]

    def complexity(self) -> int:
        return len(self._num) + (len(self._den) if self._den else 0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self._den is None and other._den is None:
            return Scalar._raw(_padd(self._num, other._num))
        a_den = self._den or {ONE_KEY: Fraction(1)}
        b_den = other._den or {ONE_KEY: Fraction(1)}
        if a_den == b_den:
            return Scalar(_padd(self._num, other._num), a_den)
        num = _padd(_pmul(self._num, b_den), _pmul(other._num, a_den))
        return Scalar(num, _pmul(a_den, b_den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: _cneg(v) for k, v in self._num.items()}, self._den)

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        if self._den is None and other._den is None:
            return Scalar._raw(_pmul(self._num, other._num))
        num = _pmul(self._num, other._num)
        den = _pmul(self._den or {ONE_KEY: Fraction(1)}, other._den or {ONE_KEY: Fraction(1)})
        return Scalar(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self._num:
            raise DivisionByZero("division by zero scalar")
        if self._den is None and len(self._num) == 1:
            (k, c), = self._num.items()
            return Scalar._raw({_kinv(k): _cinv(c)})
        return Scalar(self._den or {ONE_KEY: Fraction(1)}, self._num)

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other._num:
            raise DivisionByZero("division by zero scalar")
        if self == other:
            return ONE
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self._den is None and len(self._num) == 1:
            (k, c), = self._num.items()
            key = ONE_KEY
            coeff = Fraction(1)
            # square-and-multiply on the single term
            base_k, base_c, e = k, c, n
            while e:
                if e & 1:
                    key, coeff = _kmul(key, base_k), _cmul(coeff, base_c)
                base_k, base_c = _kmul(base_k, base_k), _cmul(base_c, base_c)
                e >>= 1
            return Scalar._raw({key: coeff})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # equality --------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._num.items()),
                               frozenset(self._den.items()) if self._den else None))
        return self._hash

    # decompositions ---------------------------------------------------------
    def terms(self):
        """Sorted (key, coefficient) pairs of the numerator (denominator must be 1)."""
        if self._den is not None:
            raise ValueError(f"{self} is not a polynomial scalar")
        return sorted(self._num.items())

    def numerator_denominator(self) -> tuple["Scalar", "Scalar"]:
        """Polynomial numerator and denominator (the latter 1 for polynomials)."""
        den = Scalar._raw(dict(self._den)) if self._den is not None else ONE
        return Scalar._raw(dict(self._num)), den

    def coordinates(self) -> dict:
        """Q-coordinates on the basis (key, zeta power); polynomial scalars only."""
        out = {}
        for key, c in self.terms():
            if isinstance(c, Cyclo):
                for i, a in enumerate(c.c):
                    if a:
                        out[(key, i)] = a
            else:
                out[(key, 0)] = c
        return out

    def linear_form(self) -> dict[str, Fraction]:
        """Read the scalar as sum q_p * p + q_0 (the argument of an exponential)."""
        out: dict[str, Fraction] = {}
        for (pm, ef), c in self.terms():
            if ef or not isinstance(c, Fraction):
                raise ValueError(f"{self} is not a rational linear form in parameters")
            if not pm:
                out[CONST] = c
            elif len(pm) == 1 and pm[0][1] == 1:
                out[pm[0][0]] = c
            else:
                raise ValueError(f"{self} is not linear in the parameters")
        return out

    def to_expunit(self) -> "ExpUnit":
        if self._den is not None or len(self._num) != 1:
            raise ValueError(f"{self} is not a unit exp(...)*root of unity")
        (key, c), = self._num.items()
        pm, ef = key
        if pm:
            raise ValueError(f"{self} involves a parameter power, not a unit")
        if isinstance(c, Fraction):
            if c == 1:
                return ExpUnit(dict(ef))
            if c == -1:
                return ExpUnit(dict(ef), root=1, order=2)
            raise ValueError(f"{self} has a non-unit coefficient")
        n = c.n
        for k in range(n):
            if Cyclo.zeta_power(n, k) == c:
                return ExpUnit(dict(ef), root=k, order=n)
        raise ValueError(f"{self}: coefficient is not a root of unity")

    # printing ----------------------------------------------------------------
    def __str__(self):
        if self._den is None:
            return _pstr(self._num)
        return f"({_pstr(self._num)})/({_pstr(self._den)})"

    def __repr__(self):
        return f"Scalar({self})"


def _coerce_or_none(x):
    if isinstance(x, Scalar):
        return x
    try:
        return Scalar.coerce(x)
    except TypeError:
        return None


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _form_str(ef) -> str:
    parts = []
    for name, e in ef:
        if name == CONST:
            parts.append(_fmt_frac(e))
        elif e == 1:
            parts.append(name)
        elif e == -1:
            parts.append("-" + name)
        elif e.denominator == 1:
            parts.append(f"{e.numerator}*{name}")
        else:
            sign = "-" if e < 0 else ""
            num = abs(e.numerator)
            parts.append(f"{sign}{'' if num == 1 else str(num) + '*'}{name}/{e.denominator}")
    return " + ".join(parts).replace("+ -", "- ")


def _term_str(key, c) -> str:
    pm, ef = key
    factors = []
    for name, e in pm:
        factors.append(name if e == 1 else f"{name}^{e}" if e > 0 else f"{name}^({e})")
    if ef:
        factors.append(f"exp({_form_str(ef)})")
    mono = "*".join(factors)
    if isinstance(c, Fraction):
        if not mono:
            return _fmt_frac(c)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{_fmt_frac(c)}*{mono}"
    cs = _cstr(c)
    if not mono:
        return cs
    return f"({cs})*{mono}"


def _pstr(p: dict) -> str:
    if not p:
        return "0"
    s = " + ".join(_term_str(k, v) for k, v in sorted(p.items(), reverse=True))
    return s.replace("+ -", "- ")


ZERO = Scalar._raw({})
ONE = Scalar._raw({ONE_KEY: Fraction(1)})


# ----------------------------------------------------------------------------
# ExpUnit
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpUnit:
    """exp(linear form in exponent symbols) * zeta_order^root.

    ``order`` is None when no root of unity is involved.
    """

    exponent: tuple = ()
    root: int = 0
    order: int | None = None

    def __init__(self, exponent: Mapping | Iterable = (), root: int = 0, order: int | None = None):
        items = exponent.items() if isinstance(exponent, Mapping) else exponent
        ef = tuple(sorted((k, Fraction(v)) for k, v in items if v))
        if order is not None:
            root %= order
            if root == 0:
                order = None
        elif root:
            raise ValueError("root part needs a cyclotomic order")
        object.__setattr__(self, "exponent", ef)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "order", order)

    def __mul__(self, other: "ExpUnit") -> "ExpUnit":
        order, r1, r2 = _common_order(self, other)
        return ExpUnit(_merge(self.exponent, other.exponent), r1 + r2, order)

    def __pow__(self, n: int) -> "ExpUnit":
        return unit_pow(self, n)

    def inverse(self) -> "ExpUnit":
        return unit_pow(self, -1)

    def is_one(self) -> bool:
        return unit_is_one(self)

    def to_scalar(self) -> Scalar:
        coeff = Cyclo.zeta_power(self.order, self.root) if self.order else Fraction(1)
        return Scalar._raw({((), self.exponent): coeff})

    def __str__(self):
        return str(self.to_scalar())


def _common_order(a: ExpUnit, b: ExpUnit):
    if a.order is None:
        return b.order, 0, b.root
    if b.order is None:
        return a.order, a.root, 0
    n = lcm(a.order, b.order)
    return n, a.root * (n // a.order), b.root * (n // b.order)


def unit_pow(u: ExpUnit, n: int) -> ExpUnit:
    return ExpUnit(tuple((k, v * n) for k, v in u.exponent), u.root * n, u.order)


def unit_is_one(u: ExpUnit) -> bool:
    return not u.exponent and (u.order is None or u.root % u.order == 0)


def scalar_arith(a, b, op: str) -> Scalar:
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


@dataclass
class ParamTable:
    """Declared generic parameters and the optional cyclotomic order."""

    generic_params: list[str] = field(default_factory=list)
    cyclotomic_order: int | None = None

    def __post_init__(self):
        if len(set(self.generic_params)) != len(self.generic_params):
            raise ValueError("parameter names must be unique")
        if self.cyclotomic_order is not None and self.cyclotomic_order < 1:
            raise ValueError("cyclotomic order must be positive")

    def zeta(self, k: int = 1) -> Scalar:
        if self.cyclotomic_order is None:
            raise ValueError("no cyclotomic order declared")
        return Scalar.zeta(self.cyclotomic_order, k)
