"""Tests for symbolic weights, parameter validation, and exact evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagalg.branching import path_count, reflected_level
from diagalg.exactalg import (
    LaurentPoly,
    PrimeFieldElement,
    RationalFunction,
    RootSpec,
    prime_field_root_of_unity,
    qint,
)
from diagalg.partitions import partitions_of, size
from diagalg.weights import (
    BMWParams,
    BrauerParams,
    GenericDelta,
    GenericR,
    IntegerDelta,
    NonIntegerDelta,
    NotRootOfUnity,
    ParameterError,
    PlusMinusOne,
    QBrauerParams,
    RootOfUnity,
    SignedPower,
    bmw_weight_at_power,
    brauer_weight,
    evaluate_weight,
    n1_cap,
    qbrauer_weight_at_power,
    validate_params,
    vanishing_level,
    weight_factor_descriptions,
)

DELTA = LaurentPoly.monomial(1, variable="delta")
ONE_D = LaurentPoly.constant(1, "delta")
Q = LaurentPoly.monomial(1, variable="q")


def rf(num, den=1):
    return RationalFunction(num, LaurentPoly.constant(den, "delta"))


def test_brauer_weight_small_shapes():
    assert brauer_weight(()) == rf(ONE_D)
    assert brauer_weight((1,)) == rf(DELTA)
    assert brauer_weight((2,)) == rf((DELTA + 2) * (DELTA - 1), 2)
    assert brauer_weight((1, 1)) == rf(DELTA * (DELTA - 1), 2)


def test_brauer_weight_normalization():
    # the weights decompose the trace of the identity: sum pc * w = delta^n
    for n in range(6):
        total = rf(LaurentPoly.constant(0, "delta"))
        for x in reflected_level(n):
            total = total + brauer_weight(x.shape) * Fraction(path_count(x))
        assert total == rf(LaurentPoly.monomial(n, 1, "delta"))


def test_qbrauer_weight_examples():
    one_q = RationalFunction(LaurentPoly.constant(1, "q"))
    assert qbrauer_weight_at_power((1, 1), 3) == RationalFunction(qint(3)) * one_q
    assert qbrauer_weight_at_power((1,), 4) == RationalFunction(qint(4))
    # [0] in the numerator makes the weight vanish identically
    assert qbrauer_weight_at_power((1,), 0).is_zero


def test_bmw_weight_of_single_box_is_delta():
    # d_(1) = delta = 1 + (r - r^-1)/(q - q^-1) with r = eps * q^(N-1)
    for eps in (1, -1):
        for N in (-3, -1, 0, 2, 5):
            w = bmw_weight_at_power((1,), N, eps)
            for q0 in (Fraction(2), Fraction(3), Fraction(-2), Fraction(5, 2)):
                r0 = eps * q0 ** (N - 1)
                expected = 1 + (r0 - 1 / r0) / (q0 - 1 / q0)
                assert w.evaluate(q0) == expected


def test_specialization_at_q_one_spot_checks():
    for la in ((2,), (1, 1), (3, 1), (2, 2, 1)):
        for N in (-4, -1, 2, 3):
            classical = brauer_weight(la).evaluate(N)
            assert qbrauer_weight_at_power(la, N).evaluate(1) == classical
            assert bmw_weight_at_power(la, N, 1).evaluate(1) == classical


def test_weight_factor_descriptions_forms():
    assert weight_factor_descriptions("brauer", (2,)) == ("(delta+2)/2", "(delta-1)/1")
    assert weight_factor_descriptions("qbrauer", (1, 1), 3) == ("[3]/[2]", "[2]/[1]")
    # generic r keeps N symbolic instead of flattening
    assert all("N" in d for d in weight_factor_descriptions("qbrauer", (1, 1)))


def test_validate_params_accepts_good_specs():
    validate_params(BrauerParams(0, IntegerDelta(2)))
    validate_params(BrauerParams(5, GenericDelta()))
    validate_params(QBrauerParams(0, NotRootOfUnity(), SignedPower(-1, 3)))
    validate_params(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(1, -3)))
    validate_params(BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(-1, -2)))
    validate_params(BMWParams(2, RootOfUnity(RootSpec(5, 5)), GenericR()))
    validate_params(QBrauerParams(3, PlusMinusOne(IntegerDelta(2)), GenericR()))


@pytest.mark.parametrize(
    "spec",
    [
        BrauerParams(0, IntegerDelta(0)),
        BrauerParams(5, IntegerDelta(10)),
        BrauerParams(4, GenericDelta()),
        QBrauerParams(0, NotRootOfUnity(), SignedPower(1, 0)),
        QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(-1, 14)),
        QBrauerParams(0, RootOfUnity(RootSpec(4, 4)), GenericR()),
        QBrauerParams(2, RootOfUnity(RootSpec(3, 6)), GenericR()),
        QBrauerParams(5, RootOfUnity(RootSpec(5, 5)), GenericR()),
        BMWParams(0, NotRootOfUnity(), SignedPower(1, 0)),
        BMWParams(0, NotRootOfUnity(), SignedPower(-1, 2)),
        BMWParams(2, NotRootOfUnity(), SignedPower(1, 2)),
        BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(1, 10)),
        BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(-1, 12)),
    ],
)
def test_validate_params_rejections(spec):
    with pytest.raises(ParameterError):
        validate_params(spec)


def test_evaluate_brauer_char_zero():
    w = evaluate_weight((2,), BrauerParams(0, IntegerDelta(2)))
    assert w.evaluable and not w.is_zero and w.value == 2
    w = evaluate_weight((2, 1), BrauerParams(0, IntegerDelta(2)))
    assert w.is_zero and w.witness_box == (2, 1) and w.value == 0
    w = evaluate_weight((2,), BrauerParams(0, IntegerDelta(1)))
    assert w.is_zero and w.witness_box == (1, 2)
    w = evaluate_weight((3, 1), BrauerParams(0, GenericDelta()))
    assert w.evaluable and not w.is_zero and w.value is None


def test_evaluate_brauer_char_p():
    # at p = 5 the shape (4,1) has hook length 5: not evaluable
    w = evaluate_weight((4, 1), BrauerParams(5, IntegerDelta(2)))
    assert not w.evaluable and w.is_zero is None
    # delta = 2 = 7 mod 5: same zero-ness either way
    a = evaluate_weight((2, 1), BrauerParams(5, IntegerDelta(2)))
    b = evaluate_weight((2, 1), BrauerParams(5, IntegerDelta(7)))
    assert a.is_zero and b.is_zero
    w = evaluate_weight((2,), BrauerParams(5, IntegerDelta(2)))
    assert w.evaluable and not w.is_zero
    assert isinstance(w.value, PrimeFieldElement) and w.value.p == 5


def test_evaluate_brauer_char_p_congruence_vanishing():
    # delta = 2 and p = 5: the shift m0(2 - 5) would vanish at level 6,
    # but level 3 already vanishes through m0(2)
    spec = BrauerParams(5, IntegerDelta(2))
    assert vanishing_level(spec, 4) == (3, (2, 1), (2, 1))


def test_evaluate_qbrauer_at_root():
    spec = QBrauerParams(0, RootOfUnity(RootSpec(5, 5)), SignedPower(1, -3))
    # (4,1) has a hook of length 5 = e: not evaluable
    w = evaluate_weight((4, 1), spec)
    assert not w.evaluable
    # vanishing iff e | N + d for some box: at (2,1) the box (2,1) has
    # d = -2, so N + d = -5
    w = evaluate_weight((2, 1), spec)
    assert w.evaluable and w.is_zero and w.witness_box == (2, 1)
    w2 = evaluate_weight((2,), spec)
    assert w2.evaluable and not w2.is_zero


def test_evaluate_bmw_realization_cross_check():
    spec = BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(-1, -2))
    for n in range(5):
        for la in partitions_of(n):
            w = evaluate_weight(la, spec, realize=True)
            if not w.evaluable:
                continue
            assert isinstance(w.value, PrimeFieldElement)
            assert (w.value.value == 0) == w.is_zero


def test_evaluate_qbrauer_realization_cross_check():
    spec = QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(-1, -3))
    for n in range(5):
        for la in partitions_of(n):
            w = evaluate_weight(la, spec, realize=True)
            if not w.evaluable:
                continue
            assert (w.value.value == 0) == w.is_zero


def test_realization_rejected_in_char_two():
    spec = BMWParams(2, RootOfUnity(RootSpec(5, 5)), SignedPower(1, 1))
    with pytest.raises(ParameterError):
        evaluate_weight((2,), spec, realize=True)


def test_prime_field_root_of_unity_orders():
    p, q0 = prime_field_root_of_unity(10)
    assert p == 11 and q0 ** 10 == PrimeFieldElement(p, 1) and q0 ** 5 != PrimeFieldElement(p, 1)


def test_n1_cap():
    assert n1_cap(BrauerParams(0, IntegerDelta(3))) is None
    assert n1_cap(BrauerParams(5, IntegerDelta(3))) == 4
    assert n1_cap(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), GenericR())) == 6
    assert n1_cap(QBrauerParams(0, NotRootOfUnity(), GenericR())) is None
    assert n1_cap(BMWParams(3, PlusMinusOne(IntegerDelta(2)), GenericR())) == 2


def test_vanishing_level_examples():
    assert vanishing_level(BrauerParams(0, IntegerDelta(2)), 4) == (3, (2, 1), (2, 1))
    assert vanishing_level(BrauerParams(0, IntegerDelta(1)), 4) == (2, (2,), (1, 2))
    assert vanishing_level(BrauerParams(0, IntegerDelta(5)), 4) is None
    assert vanishing_level(BrauerParams(0, IntegerDelta(-2)), 4) == (2, (2,), (1, 1))
    with pytest.raises(ParameterError):
        vanishing_level(BrauerParams(0, IntegerDelta(2)), 1)


def test_vanishing_level_matches_weight_scan():
    # the reported witness shape really is the first vanishing weight
    for d in (1, -1, 2, -2, 3, -4):
        spec = BrauerParams(0, IntegerDelta(d))
        hit = vanishing_level(spec, 4)
        for n in range(2, 5):
            zero_shapes = [la for la in partitions_of(n) if evaluate_weight(la, spec).is_zero]
            if zero_shapes:
                assert hit is not None and hit[0] == n and hit[1] in zero_shapes
                break
        else:
            assert hit is None


@given(st.integers(-8, 8), st.integers(2, 9))
@settings(max_examples=60)
def test_qbrauer_root_vanishing_matches_congruence(N, e):
    # zero-ness at a root of unity depends only on N mod e
    if N % e == 0:
        return
    spec = QBrauerParams(0, RootOfUnity(RootSpec(e, e if e % 2 else 2 * e)), SignedPower(1, N))
    spec2 = QBrauerParams(0, RootOfUnity(RootSpec(e, e if e % 2 else 2 * e)), SignedPower(1, N - e))
    for la in ((2,), (1, 1), (2, 1), (3,)):
        a = evaluate_weight(la, spec)
        b = evaluate_weight(la, spec2)
        if a.evaluable and b.evaluable:
            assert a.is_zero == b.is_zero
