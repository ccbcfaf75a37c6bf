"""Exact coefficient arithmetic.

Three value types live here:

* :class:`LaurentQT` -- sparse Laurent polynomials in ``q`` and ``t``.
* :class:`RationalQ` -- reduced rational functions in ``q``.
* :class:`CycInt` -- elements of ``Z[zeta_l]`` stored modulo the cyclotomic
  polynomial, so equality is a vector comparison.

Coefficients are Python ints (arbitrary precision).  ``LaurentQT`` also
accepts :class:`fractions.Fraction` coefficients because power-sum expansions
carry ``1/z_mu`` factors; fractions with denominator one collapse to ints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Mapping, Sequence

__all__ = [
    "NotDivisible",
    "LaurentQT",
    "RationalQ",
    "CycInt",
    "q",
    "t",
    "cyclotomic_poly",
    "eval_at_roots",
    "exact_divide",
    "euler_phi",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _is_scalar(x) -> bool:
    return isinstance(x, Rational)


# ---------------------------------------------------------------------------
# LaurentQT


class LaurentQT:
    """Sparse Laurent polynomial in ``q`` and ``t``.

    Stored as a mapping ``(a, b) -> coeff`` meaning ``coeff * q**a * t**b``.
    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    clean[(int(a), int(b))] = _normalize(c)
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c) -> "LaurentQT":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c=1) -> "LaurentQT":
        return cls({(a, b): c})

    @classmethod
    def from_q_coeffs(cls, coeffs: Sequence, shift: int = 0) -> "LaurentQT":
        """Univariate ``sum coeffs[i] q**(i+shift)``."""
        return cls({(i + shift, 0): c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x) -> "LaurentQT":
        if isinstance(x, LaurentQT):
            return x
        if _is_scalar(x):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentQT")

    # accessors
    @property
    def terms(self) -> dict[tuple[int, int], object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, a: int, b: int = 0):
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_univariate(self) -> bool:
        return all(b == 0 for _, b in self._terms)

    def is_polynomial(self) -> bool:
        return all(a >= 0 and b >= 0 for a, b in self._terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def degree_bounds(self) -> tuple[int, int, int, int]:
        """``(min_a, max_a, min_b, max_b)``; raises on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree bounds")
        As = [a for a, _ in self._terms]
        Bs = [b for _, b in self._terms]
        return min(As), max(As), min(Bs), max(Bs)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, LaurentQT):
            if not _is_scalar(other):
                return NotImplemented
            other = LaurentQT.const(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentQT(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQT({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentQT):
            if not _is_scalar(other):
                return NotImplemented
            other = LaurentQT.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return LaurentQT()
            return LaurentQT({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentQT):
            return NotImplemented
        out: dict[tuple[int, int], object] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentQT(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError
            return LaurentQT({k: Fraction(c) / other for k, c in self._terms.items()})
        if isinstance(other, LaurentQT):
            return exact_divide(self, other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only for monomials")
            ((a, b), c), = self._terms.items()
            return LaurentQT({(a * e, b * e): Fraction(1) / Fraction(c) ** (-e)})
        out = LaurentQT.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentQT):
            return self._terms == other._terms
        if _is_scalar(other):
            return self._terms == LaurentQT.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitutions
    def subs(self, q_to: tuple[int, int] = (1, 0), t_to: tuple[int, int] = (0, 1)) -> "LaurentQT":
        """Monomial substitution ``q -> q^x t^y``, ``t -> q^u t^v``."""
        (x, y), (u, v) = q_to, t_to
        out: dict[tuple[int, int], object] = {}
        for (a, b), c in self._terms.items():
            k = (a * x + b * u, a * y + b * v)
            out[k] = out.get(k, 0) + c
        return LaurentQT(out)

    def swap_qt(self) -> "LaurentQT":
        return LaurentQT({(b, a): c for (a, b), c in self._terms.items()})

    def t_to_q_inverse(self) -> "LaurentQT":
        """Substitute ``t = q**-1``."""
        return self.subs((1, 0), (-1, 0))

    def at_one(self):
        """Value at ``q = t = 1``."""
        return _normalize(sum(self._terms.values(), 0))

    def weight_classes(self, ell: int) -> list:
        """Sum of coefficients of ``q^a t^b`` grouped by ``(a - b) mod ell``."""
        out = [0] * ell
        for (a, b), c in self._terms.items():
            out[(a - b) % ell] += c
        return [_normalize(c) for c in out]

    def q_coefficients(self) -> tuple[int, list]:
        """Dense coefficients of a univariate polynomial: ``(shift, coeffs)``."""
        if not self.is_univariate():
            raise ValueError("polynomial involves t")
        if not self._terms:
            return 0, []
        lo = min(a for a, _ in self._terms)
        hi = max(a for a, _ in self._terms)
        coeffs = [0] * (hi - lo + 1)
        for (a, _), c in self._terms.items():
            coeffs[a - lo] = c
        return lo, coeffs

    # serialization / display
    def to_json(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("JSON form requires integer coefficients")
        return [[a, b, c] for (a, b), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, triples: Iterable[Sequence[int]]) -> "LaurentQT":
        return cls({(int(a), int(b)): int(c) for a, b, c in triples})

    def __repr__(self):
        return f"LaurentQT({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("q", a), ("t", b)) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


q = LaurentQT.monomial(1, 0)
t = LaurentQT.monomial(0, 1)


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, low degree first)


def _trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(f: Sequence, g: Sequence) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def _padd(f: Sequence, g: Sequence) -> list:
    n = max(len(f), len(g))
    return _trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def _pdivmod(f: Sequence, g: Sequence) -> tuple[list, list]:
    """Polynomial long division over the rationals."""
    g = _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in _trim(f)]
    quo = [Fraction(0)] * max(len(r) - len(g) + 1, 0)
    lead = Fraction(g[-1])
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        c = r[-1] / lead
        quo[shift] = c
        for i, b in enumerate(g):
            r[i + shift] -= c * b
        r = _trim(r)
    return [_normalize(c) for c in _trim(quo)], [_normalize(c) for c in r]


def _pgcd(f: Sequence, g: Sequence) -> list:
    """Monic gcd over the rationals."""
    a, b = _trim(f), _trim(g)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [_normalize(Fraction(c) / lead) for c in a]


def _content(p: Sequence) -> Fraction:
    """Positive rational content: ``p / content`` is primitive over Z."""
    p = [Fraction(c) for c in p if c]
    if not p:
        return Fraction(1)
    den = lcm(*(c.denominator for c in p))
    num = 0
    for c in p:
        num = gcd(num, int(c * den))
    return Fraction(num, den)


@lru_cache(maxsize=None)
def _cyclotomic_dense(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            quo, rem = _pdivmod(poly, _cyclotomic_dense(d))
            if rem:
                raise AssertionError("cyclotomic division not exact")
            poly = quo
    return tuple(int(c) for c in poly)


def cyclotomic_poly(ell: int) -> LaurentQT:
    """The ``ell``-th cyclotomic polynomial as a polynomial in ``q``."""
    return LaurentQT.from_q_coeffs(_cyclotomic_dense(ell))


def euler_phi(n: int) -> int:
    return len(_cyclotomic_dense(n)) - 1


# ---------------------------------------------------------------------------
# exact division


def exact_divide(f, g):
    """Return ``h`` with ``g * h == f`` or raise :class:`NotDivisible`.

    Works for ``LaurentQT`` (bivariate Laurent) and ``RationalQ``; for the
    former the quotient is searched inside the exponent box forced by the
    degree bounds, so the division always terminates.
    """
    if isinstance(f, RationalQ) or isinstance(g, RationalQ):
        return RationalQ.coerce(f) / RationalQ.coerce(g)
    f = LaurentQT.coerce(f)
    g = LaurentQT.coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return LaurentQT()
    fa0, fa1, fb0, fb1 = f.degree_bounds()
    ga0, ga1, gb0, gb1 = g.degree_bounds()
    amin, amax = fa0 - ga0, fa1 - ga1
    bmin, bmax = fb0 - gb0, fb1 - gb1
    lead = max(g._terms)
    lc = g._terms[lead]
    rem = dict(f._terms)
    quo: dict[tuple[int, int], object] = {}
    while rem:
        top = max(rem)
        a, b = top[0] - lead[0], top[1] - lead[1]
        if not (amin <= a <= amax and bmin <= b <= bmax):
            raise NotDivisible(f"{f} is not divisible by {g}")
        c = Fraction(rem[top]) / lc
        c = _normalize(c)
        quo[(a, b)] = c
        for (ga, gb), gc in g._terms.items():
            k = (ga + a, gb + b)
            v = rem.get(k, 0) - c * gc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentQT(quo)


# ---------------------------------------------------------------------------
# RationalQ


class RationalQ:
    """Rational function in ``q`` in canonical reduced form.

    Canonical form: ``q**shift * N(q) / D(q)`` with ``N, D`` integer
    polynomials, ``D(0) != 0``, ``gcd(N, D) = 1``, the combined content of
    ``N`` and ``D`` equal to one and ``D`` with positive leading coefficient.
    Zero is ``0/1``.
    """

    __slots__ = ("shift", "num", "den")

    def __init__(self, num, den=1):
        num = LaurentQT.coerce(num)
        den = LaurentQT.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalQ with zero denominator")
        ns, nc = num.q_coefficients()
        ds, dc = den.q_coefficients()
        self._set(ns - ds, nc, dc)

    def _set(self, shift: int, nc: list, dc: list) -> None:
        nc, dc = _trim(nc), _trim(dc)
        if not nc:
            self.shift, self.num, self.den = 0, (), (1,)
            return
        # pull out powers of q so both constant terms are nonzero
        while not nc[0]:
            nc = nc[1:]
            shift += 1
        while not dc[0]:
            dc = dc[1:]
            shift -= 1
        g = _pgcd(nc, dc)
        if len(g) > 1:
            nc, r1 = _pdivmod(nc, g)
            dc, r2 = _pdivmod(dc, g)
            assert not r1 and not r2
        cont = _content(list(nc) + list(dc))
        if Fraction(dc[-1]) < 0:
            cont = -cont
        self.shift = shift
        self.num = tuple(int(Fraction(c) / cont) for c in nc)
        self.den = tuple(int(Fraction(c) / cont) for c in dc)

    @classmethod
    def _raw(cls, shift, nc, dc) -> "RationalQ":
        obj = cls.__new__(cls)
        obj._set(shift, list(nc), list(dc))
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalQ":
        if isinstance(x, RationalQ):
            return x
        if isinstance(x, LaurentQT):
            return cls(x)
        if _is_scalar(x):
            x = Fraction(x)
            return cls._raw(0, [x.numerator], [x.denominator])
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalQ")

    @property
    def numerator(self) -> LaurentQT:
        return LaurentQT.from_q_coeffs(self.num, self.shift)

    @property
    def denominator(self) -> LaurentQT:
        return LaurentQT.from_q_coeffs(self.den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        return len(self.den) == 1

    def to_laurent(self) -> LaurentQT:
        if len(self.den) != 1:
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return LaurentQT.from_q_coeffs([Fraction(c, self.den[0]) for c in self.num], self.shift)

    def _parts(self):
        return self.shift, list(self.num), list(self.den)

    def __add__(self, other):
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        s1, n1, d1 = self._parts()
        s2, n2, d2 = other._parts()
        if not n1:
            return other
        if not n2:
            return self
        s = min(s1, s2)
        n1 = [0] * (s1 - s) + n1
        n2 = [0] * (s2 - s) + n2
        if d1 == d2:
            return RationalQ._raw(s, _padd(n1, n2), d1)
        return RationalQ._raw(s, _padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return RationalQ._raw(self.shift, [-c for c in self.num], self.den)

    def __sub__(self, other):
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        s1, n1, d1 = self._parts()
        s2, n2, d2 = other._parts()
        return RationalQ._raw(s1 + s2, _pmul(n1, n2), _pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "RationalQ":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalQ._raw(-self.shift, list(self.den), list(self.num))

    def __truediv__(self, other):
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalQ.coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.shift, self.num, self.den) == (other.shift, other.num, other.den)

    def __hash__(self):
        return hash((self.shift, self.num, self.den))

    def __repr__(self):
        return f"RationalQ({self})"

    def __str__(self):
        num = str(self.numerator)
        if self.den == (1,):
            return num
        return f"({num})/({self.denominator})"


# ---------------------------------------------------------------------------
# CycInt


@lru_cache(maxsize=None)
def _power_table(order: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient vectors of ``x**k mod Phi_order`` for ``k < order``."""
    phi = _cyclotomic_dense(order)
    d = len(phi) - 1
    rows = []
    vec = [0] * d
    vec[0] = 1
    for _ in range(order):
        rows.append(tuple(vec))
        # multiply by x and reduce with the monic relation x^d = -sum phi_i x^i
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(d):
                vec[i] -= top * phi[i]
    return tuple(rows)


class CycInt:
    """Element of ``Z[zeta_order]`` in the power basis modulo ``Phi_order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int] | None = None):
        if order < 1:
            raise ValueError("order must be >= 1")
        d = euler_phi(order)
        if coeffs is None:
            coeffs = [0] * d
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > d:
            # reduce stray high powers
            out = [0] * d
            table = _power_table(order)
            for k, c in enumerate(coeffs):
                if c:
                    row = table[k % order]
                    for i in range(d):
                        out[i] += c * row[i]
            coeffs = out
        else:
            coeffs = coeffs + [0] * (d - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_powers(cls, order: int, powers: Mapping[int, int] | Iterable[tuple[int, int]]) -> "CycInt":
        """``sum c * zeta**k`` over ``{k: c}`` (exponents taken mod order)."""
        items = powers.items() if isinstance(powers, Mapping) else powers
        d = euler_phi(order)
        table = _power_table(order)
        out = [0] * d
        for k, c in items:
            if c:
                row = table[k % order]
                for i in range(d):
                    out[i] += c * row[i]
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = tuple(out)
        return obj

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycInt":
        return cls.from_powers(order, {power: 1})

    @classmethod
    def integer(cls, order: int, value: int) -> "CycInt":
        return cls.from_powers(order, {0: int(value)})

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise ValueError(f"mixed orders {self.order} and {other.order}")
            return other
        if isinstance(other, int):
            return CycInt.integer(self.order, other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return CycInt.integer(self.order, other.numerator)
        raise TypeError(f"cannot combine CycInt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        prod: dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] = prod.get(i + j, 0) + a * b
        return CycInt.from_powers(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = CycInt.integer(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def exact_div(self, n: int) -> "CycInt":
        """Divide by a nonzero integer; raise :class:`NotDivisible` if inexact."""
        if any(c % n for c in self.coeffs):
            raise NotDivisible(f"{self} not divisible by {n}")
        return CycInt(self.order, [c // n for c in self.coeffs])

    def conjugate(self) -> "CycInt":
        """Image under ``zeta -> zeta**-1`` (complex conjugation)."""
        return CycInt.from_powers(self.order, {-i: c for i, c in enumerate(self.coeffs)})

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**i for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = [
            f"{c}" if i == 0 else f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c
        ]
        return f"CycInt[{self.order}]({' + '.join(terms) or '0'})"


def eval_at_roots(f: LaurentQT, ell: int, a: int, b: int = 0) -> CycInt:
    """Evaluate ``f`` at ``q = zeta_ell**a``, ``t = zeta_ell**b``."""
    f = LaurentQT.coerce(f)
    powers: dict[int, int] = {}
    for (x, y), c in f.items():
        if not isinstance(c, int):
            raise ValueError("evaluation in Z[zeta] needs integer coefficients")
        k = (a * x + b * y) % ell
        powers[k] = powers.get(k, 0) + c
    return CycInt.from_powers(ell, powers)
