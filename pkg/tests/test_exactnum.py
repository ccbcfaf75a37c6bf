from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from procesi.exactnum import (
    CycInt,
    LaurentQT,
    NotDivisible,
    RationalQ,
    cyclotomic_poly,
    euler_phi,
    eval_at_roots,
    exact_divide,
    q,
    t,
)

coeff = st.integers(-5, 5)
expo = st.integers(-3, 3)
laurent = st.dictionaries(st.tuples(expo, expo), coeff, max_size=5).map(LaurentQT)
qpoly = st.dictionaries(st.tuples(expo, st.just(0)), coeff, max_size=4).map(LaurentQT)
nonzero_qpoly = qpoly.filter(lambda f: not f.is_zero())
rational = st.tuples(qpoly, nonzero_qpoly).map(lambda p: RationalQ(*p))


@st.composite
def cyc_pair(draw, count=3):
    order = draw(st.integers(1, 12))
    vals = [
        CycInt.from_powers(order, draw(st.lists(st.tuples(st.integers(0, 11), coeff), max_size=5)))
        for _ in range(count)
    ]
    return vals


def _ring_axioms(a, b, c, zero, one):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a - a == zero


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    _ring_axioms(a, b, c, LaurentQT(), LaurentQT.const(1))


@given(rational, rational, rational)
@settings(max_examples=60, deadline=None)
def test_rational_ring_axioms(a, b, c):
    _ring_axioms(a, b, c, RationalQ(0), RationalQ(1))


@given(cyc_pair())
def test_cycint_ring_axioms(vals):
    a, b, c = vals
    _ring_axioms(a, b, c, CycInt(a.order), CycInt.integer(a.order, 1))


@given(qpoly, nonzero_qpoly)
@settings(deadline=None)
def test_rational_reduces(a, b):
    r = RationalQ(a, b)
    assert r * RationalQ(b) == RationalQ(a)


@given(qpoly, qpoly)
def test_rational_agrees_with_laurent(a, b):
    assert RationalQ(a) + RationalQ(b) == RationalQ(a + b)
    assert RationalQ(a) * RationalQ(b) == RationalQ(a * b)
    assert RationalQ(a * b).to_laurent() == a * b


def test_laurent_basics():
    f = (1 + q) * (1 - t)
    assert f.coeff(1, 0) == 1 and f.coeff(1, 1) == -1
    assert f.at_one() == 0
    assert (q**-2 * q**2) == LaurentQT.const(1)
    assert LaurentQT({(0, 0): 0}).is_zero()
    assert (q * t).t_to_q_inverse() == LaurentQT.const(1)
    assert (q + 2 * t).swap_qt() == t + 2 * q
    assert LaurentQT.from_json((q * t - 3).to_json()) == q * t - 3
    assert (q**2 * t).weight_classes(3) == [0, 1, 0]
    assert LaurentQT({(1, 0): Fraction(2, 2)}).is_integral()


def test_rational_canonical_form():
    r = RationalQ(2 - 2 * q, 4 - 4 * q**2)
    assert r == RationalQ(LaurentQT.const(1), 2 + 2 * q)
    assert (r.num, r.den) == ((1,), (2, 2))
    assert RationalQ(q**3, q) == RationalQ(q**2)
    assert RationalQ(-1, -q).shift == -1
    assert RationalQ(0, 1 + q).is_zero()
    with pytest.raises(ZeroDivisionError):
        RationalQ(1, 0)


def test_cycint_basics():
    z = CycInt.zeta(4)
    assert z * z == CycInt.integer(4, -1)
    assert z**4 == CycInt.integer(4, 1)
    for order in range(2, 13):
        s = sum((CycInt.zeta(order, k) for k in range(order)), CycInt(order))
        assert s.is_zero()
        assert CycInt.zeta(order) ** order == CycInt.integer(order, 1)
    assert CycInt.zeta(6).conjugate() == CycInt.zeta(6, -1)
    assert (CycInt.zeta(3) + CycInt.zeta(3, 2)).to_int() == -1
    assert CycInt.from_powers(3, [(0, 2), (3, 1)]) == CycInt.integer(3, 3)


@pytest.mark.parametrize(
    "f, ell, a, b, expected",
    [(q + q**2, 2, 1, 0, 0), (LaurentQT.const(1), 5, 2, 3, 1), (q * t, 3, 1, -1, 1)],
)
def test_eval_at_roots(f, ell, a, b, expected):
    assert eval_at_roots(f, ell, a, b) == CycInt.integer(ell, expected)


def test_eval_at_roots_matches_complex():
    import cmath

    f = 3 * q**2 - t + q * t**-1
    for ell in range(1, 9):
        for a in range(ell):
            for b in range(ell):
                v = eval_at_roots(f, ell, a, b).to_complex()
                zq, zt = cmath.exp(2j * cmath.pi * a / ell), cmath.exp(2j * cmath.pi * b / ell)
                assert abs(v - (3 * zq**2 - zt + zq / zt)) < 1e-9


@pytest.mark.parametrize(
    "f, g, h",
    [(1 - q**2, 1 - q, 1 + q), (q + q**2, q, 1 + q), (q**2 * t - t, q - 1, t * q + t)],
)
def test_exact_divide(f, g, h):
    assert exact_divide(f, g) == h


def test_exact_divide_raises():
    with pytest.raises(NotDivisible):
        exact_divide(1 + q, 1 - q)
    with pytest.raises(ZeroDivisionError):
        exact_divide(q, LaurentQT())


@pytest.mark.parametrize(
    "ell, coeffs", [(1, [-1, 1]), (3, [1, 1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1])]
)
def test_cyclotomic(ell, coeffs):
    assert cyclotomic_poly(ell) == LaurentQT.from_q_coeffs(coeffs)


def test_cyclotomic_product_and_degree():
    for n in range(1, 13):
        prod = LaurentQT.const(1)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == q**n - 1
        assert max(a for a, _ in cyclotomic_poly(n).terms) == euler_phi(n)


def test_cyclotomic_roots():
    # prod_{k coprime} (x - zeta^k) = Phi_ell, compared coefficientwise in Z[zeta]
    for ell in range(1, 13):
        poly = [CycInt.integer(ell, 1)]
        for k in range(ell):
            if gcd(k, ell) == 1:
                root = CycInt.zeta(ell, k)
                new = [CycInt(ell)] * (len(poly) + 1)
                for i, c in enumerate(poly):
                    new[i + 1] = new[i + 1] + c
                    new[i] = new[i] - c * root
                poly = new
        phi = cyclotomic_poly(ell)
        assert [c.to_int() for c in poly] == [phi.coeff(i, 0) for i in range(len(poly))]
        assert eval_at_roots(phi, ell, 1).is_zero()
