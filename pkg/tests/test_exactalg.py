"""Tests for the exact scalar layer: Laurent polynomials, rational functions, F_p."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagalg.exactalg import (
    LaurentPoly,
    PrimeFieldElement,
    RationalFunction,
    RootSpec,
    e_of_q,
    is_prime,
    laurent_gcd,
    prime_field_root_of_unity,
    primitive_root,
    qint,
    qint_at_pm_one,
    signed_power_is_minus_one,
    signed_power_is_one,
)

Q = LaurentPoly.monomial(1)
QINV = LaurentPoly.monomial(-1)
ONE = LaurentPoly.constant(1)


@st.composite
def laurent_st(draw, max_terms=4, max_exp=5):
    n = draw(st.integers(0, max_terms))
    coeffs = {}
    for _ in range(n):
        k = draw(st.integers(-max_exp, max_exp))
        c = draw(st.integers(-9, 9))
        coeffs[k] = coeffs.get(k, 0) + c
    return LaurentPoly(coeffs)


def test_laurent_ring_examples():
    assert (Q - QINV) * (Q + QINV) == LaurentPoly({2: 1, -2: -1})
    p = LaurentPoly({2: 1, 0: 1, -2: 1})
    assert p.evaluate(1) == 3
    assert p.evaluate(2) == Fraction(4) + 1 + Fraction(1, 4)
    top = LaurentPoly({3: 1, -3: -1})
    assert top.exact_div(Q - QINV) == p
    with pytest.raises(ValueError):
        (Q + ONE).exact_div(Q - ONE)


def test_laurent_negative_power_needs_monomial():
    assert Q**-3 == LaurentPoly.monomial(-3)
    assert LaurentPoly.monomial(2, 4) ** -1 == LaurentPoly.monomial(-2, Fraction(1, 4))
    with pytest.raises(ValueError):
        (Q + ONE) ** -1


def test_laurent_variable_tags():
    d = LaurentPoly.monomial(1, variable="delta")
    with pytest.raises(ValueError):
        Q + d
    # constants are variable-agnostic
    assert LaurentPoly.constant(3, "delta") == LaurentPoly.constant(3, "q")
    assert (d + 1).variable == "delta"


def test_qint_examples():
    assert qint(3) == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert qint(1) == ONE
    assert qint(0).is_zero
    assert qint(-3) == -qint(3)
    assert qint(4).evaluate(1) == 4
    assert qint_at_pm_one(4, 1) == 4
    assert qint_at_pm_one(4, -1) == 4
    assert qint_at_pm_one(3, -1) == -3
    assert qint_at_pm_one(5, 1) == 5


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_qint_addition_rule(a, b):
    # [a+b] = q^b [a] + q^-a [b], a standard q-integer identity
    lhs = qint(a + b)
    rhs = qint(a).shift(b) + qint(b).shift(-a)
    assert lhs == rhs


@given(laurent_st(), laurent_st(), laurent_st())
@settings(max_examples=200)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly({}) == a
    assert a * ONE == a


@given(laurent_st(), laurent_st())
@settings(max_examples=200)
def test_laurent_exact_div_roundtrip(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


@given(laurent_st(), st.integers(-5, 5).filter(bool))
@settings(max_examples=200)
def test_laurent_deflation(a, point):
    if a.is_zero:
        return
    m, g = a.deflate(Fraction(point))
    assert g.evaluate(point) != 0
    assert g * (Q - point) ** m == a


def test_rational_function_equality_and_normalize():
    # (q^2 - q^-2) / (q - q^-1) == q + q^-1 without reducing
    x = RationalFunction(LaurentPoly({2: 1, -2: -1}), Q - QINV)
    y = RationalFunction(Q + QINV)
    assert x == y
    n = x.normalize()
    assert n.num == Q + QINV and n.den == ONE
    # normalization is idempotent and canonical
    z = RationalFunction((Q + QINV) * LaurentPoly({3: -2}), ONE * LaurentPoly({3: -2}))
    assert z.normalize().num == n.num
    assert z.normalize().den == n.den
    assert n.normalize().num == n.num


def test_rational_function_evaluate_with_cancellation():
    # (q^3 - q^-3)/(q - q^-1) at q = 1 must cancel the shared zero and give 3
    x = RationalFunction(LaurentPoly({3: 1, -3: -1}), Q - QINV)
    assert x.evaluate(1) == 3
    assert x.evaluate(-1) == 3  # symbolic limit of [3]
    with pytest.raises(ZeroDivisionError):
        RationalFunction(ONE, Q - ONE).evaluate(1)
    assert RationalFunction(Q - ONE, ONE).evaluate(1) == 0


@given(laurent_st(), laurent_st(), laurent_st(), laurent_st())
@settings(max_examples=150)
def test_rational_function_field_axioms(a, b, c, d):
    if b.is_zero or d.is_zero:
        return
    x = RationalFunction(a, b)
    y = RationalFunction(c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert x - x == RationalFunction.constant(0)
    if not y.is_zero:
        assert (x / y) * y == x


@given(laurent_st(), laurent_st())
@settings(max_examples=100)
def test_rational_function_normalize_is_canonical(a, b):
    if b.is_zero:
        return
    x = RationalFunction(a, b)
    scaled = RationalFunction(a * LaurentPoly({2: -3}), b * LaurentPoly({2: -3}))
    nx, ns = x.normalize(), scaled.normalize()
    assert nx.num == ns.num and nx.den == ns.den
    again = nx.normalize()
    assert again.num == nx.num and again.den == nx.den


def test_prime_field_arithmetic():
    a = PrimeFieldElement(7, 3)
    b = PrimeFieldElement(7, 5)
    assert a + b == 1
    assert a * b == 1
    assert a / b == 3 * 3 % 7
    assert a**-1 == 5
    assert -a == 4
    assert PrimeFieldElement(7, 10) == 3
    with pytest.raises(ValueError):
        PrimeFieldElement(6, 1)
    with pytest.raises(ValueError):
        a + PrimeFieldElement(5, 1)
    assert PrimeFieldElement(5, 2) / PrimeFieldElement(5, 3) == 4
    # Fractions embed when the denominator is a unit
    assert a + Fraction(1, 2) == 3 + 4


def test_root_spec_validation_and_consistency():
    assert RootSpec(5, 10).field_consistent
    assert RootSpec(5, 5).field_consistent
    assert not RootSpec(4, 4).field_consistent
    assert RootSpec(4, 8).field_consistent
    with pytest.raises(ValueError):
        RootSpec(1, 2)
    with pytest.raises(ValueError):
        RootSpec(4, 6)


def test_signed_power_congruences():
    spec = RootSpec(5, 10)  # q of order 10
    assert signed_power_is_one(1, 0, spec)
    assert signed_power_is_one(1, 10, spec)
    assert not signed_power_is_one(1, 5, spec)
    assert signed_power_is_minus_one(1, 5, spec)  # q^5 = -1 when ord(q) = 10
    assert signed_power_is_one(-1, 5, spec)  # -q^5 = 1
    assert signed_power_is_minus_one(-1, 0, spec)
    odd = RootSpec(5, 5)
    assert not signed_power_is_one(-1, 0, odd)  # -1 != 1, f odd
    assert not signed_power_is_minus_one(1, 3, odd)
    # characteristic 2 collapses signs
    assert signed_power_is_one(-1, 0, odd, char2=True)
    assert signed_power_is_minus_one(1, 5, odd, char2=True)


def test_e_of_q():
    assert e_of_q(RootSpec(5, 10)) == 5
    assert e_of_q(1, characteristic=7) == 7
    assert e_of_q(-1, characteristic=5) == 5
    assert e_of_q(1, characteristic=0) is None
    with pytest.raises(ValueError):
        e_of_q(3)


def test_prime_utilities():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    for p in (3, 5, 7, 11, 13):
        g = primitive_root(p)
        assert sorted(pow(g, k, p) for k in range(p - 1)) == list(range(1, p))


@given(st.integers(2, 24))
def test_prime_field_root_of_unity_has_exact_order(f):
    p, q0 = prime_field_root_of_unity(f)
    assert is_prime(p) and (p - 1) % f == 0
    assert q0**f == 1
    assert all(q0**k != 1 for k in range(1, f))
