"""Tests for the closed-form bounds, brute-force oracles, and decisions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagalg.criteria import (
    UNBOUNDED,
    Constituent,
    UnboundedType,
    Verdict,
    bound_min,
    decide_bmw,
    decide_brauer,
    decide_qbrauer,
    is_bounded,
    m0,
    m1,
    m1p,
    m2,
    m2p,
    m3,
    m3p,
    m_bruteforce,
    mprime_bruteforce,
)
from diagalg.exactalg import RootSpec
from diagalg.partitions import dvalue, size
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
    evaluate_weight,
)


def test_unbounded_is_a_singleton_identity_for_min():
    assert UnboundedType() is UNBOUNDED
    assert bound_min() is UNBOUNDED
    assert bound_min(UNBOUNDED, UNBOUNDED) is UNBOUNDED
    assert bound_min(5, UNBOUNDED, 3) == 3
    assert is_bounded(4) and not is_bounded(UNBOUNDED)


def test_remark_values_at_zero():
    assert m_bruteforce(0, 0)[0] == 2
    assert m_bruteforce(2, 0)[0] == 2
    assert m_bruteforce(1, 0)[0] == 3
    assert m3(0) is UNBOUNDED
    with pytest.raises(ParameterError):
        m0(0)
    with pytest.raises(ParameterError):
        m1(0)
    with pytest.raises(ParameterError):
        m2(0)


def test_closed_form_examples():
    assert m0(3) == 4
    assert m1(-2) == 5
    assert m2(-2) == 2
    assert m0(-2) == 2
    assert m2(-3) is UNBOUNDED
    assert m3(2) == 2
    assert m3(6) == 3
    assert m3(-4) is UNBOUNDED
    assert m3(5) is UNBOUNDED


@given(st.integers(-12, 12))
@settings(max_examples=50, deadline=None)
def test_closed_forms_match_bruteforce(x):
    if x != 0:
        assert m0(x) == m_bruteforce(0, x, 30)[0]
        assert m1(x) == m_bruteforce(1, x, 30)[0]
        assert m2(x) == m_bruteforce(2, x, 30)[0]
    assert m3(x) == m_bruteforce(3, x, 30)[0]


def test_bruteforce_witnesses_are_valid():
    for kind, arg in ((0, 3), (0, -2), (1, -4), (2, -6), (3, 4)):
        level, witness = m_bruteforce(kind, arg, 30)
        assert witness is not None
        la, box = witness
        assert size(la) == level
        if kind == 3:
            from diagalg.partitions import bvalue

            assert box[0] == box[1] and bvalue(la, box) == -arg
        else:
            assert dvalue(la, box) == -arg
            if kind == 1:
                assert box[0] != box[1]
            if kind == 2:
                assert box[0] == box[1]


def test_bruteforce_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        m_bruteforce(4, 1)
    with pytest.raises(ParameterError):
        m_bruteforce(0, 1, 1)
    with pytest.raises(ParameterError):
        mprime_bruteforce(0, 0, 1, RootSpec(3, 3), False)


def test_primed_examples():
    assert m1p(-2, 5) == 4
    assert m2p(-1, 1, RootSpec(7, 7), False) == 5
    assert m2p(-2, -1, RootSpec(5, 10), False) is UNBOUNDED
    assert m3p(-2, -1, RootSpec(5, 10), False) == 4
    # odd f makes the sign conditions unsatisfiable for the "wrong" eps
    assert m2p(-1, -1, RootSpec(5, 5), False) is UNBOUNDED
    assert m3p(-1, 1, RootSpec(5, 5), False) is UNBOUNDED
    with pytest.raises(ParameterError):
        m1p(1, 5)
    with pytest.raises(ParameterError):
        m1p(-5, 5)


@given(st.integers(2, 9), st.booleans(), st.booleans(), st.booleans())
@settings(max_examples=60, deadline=None)
def test_primed_closed_forms_match_bruteforce(e, doubled, eps_plus, char2):
    f = 2 * e if doubled else e
    rs = RootSpec(e, f)
    eps = 1 if eps_plus else -1
    for N in range(-e + 1, 1):
        assert m1p(N, e) == mprime_bruteforce(1, N, eps, rs, char2, 36)[0]
        assert m2p(N, eps, rs, char2) == mprime_bruteforce(2, N, eps, rs, char2, 36)[0]
        assert m3p(N, eps, rs, char2) == mprime_bruteforce(3, N, eps, rs, char2, 36)[0]


def test_decide_brauer_cases():
    assert decide_brauer(BrauerParams(0, GenericDelta())).m is UNBOUNDED
    assert decide_brauer(BrauerParams(0, NonIntegerDelta())).m is UNBOUNDED
    assert decide_brauer(BrauerParams(7, GenericDelta())).m == 6
    assert decide_brauer(BrauerParams(0, IntegerDelta(2))).m == 3
    assert decide_brauer(BrauerParams(0, IntegerDelta(5))).m == 6
    assert decide_brauer(BrauerParams(0, IntegerDelta(-1))).m == 4
    v = decide_brauer(BrauerParams(5, IntegerDelta(2)))
    assert v.m == 3
    assert [c.value for c in v.constituents] == [4, 3, 6]
    assert v.normalized == (("N", 2),)
    # delta reduces mod p before the formula applies
    assert decide_brauer(BrauerParams(5, IntegerDelta(7))) == v


def test_decide_qbrauer_cases():
    assert decide_qbrauer(QBrauerParams(0, NotRootOfUnity(), GenericR())).m is UNBOUNDED
    assert decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), GenericR())).m == 6
    v = decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(1, -3)))
    assert v.m == 5 and v.normalized == (("N", -3),)
    assert [c.value for c in v.constituents] == [6, 6, 6, 5]
    v = decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(6, 12)), SignedPower(1, -3)))
    assert v.m == 4
    assert [c.value for c in v.constituents] == [5, 6, 12, 4]
    # the sign of r does not matter for the q-Brauer bound
    plus = decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(1, -3)))
    minus = decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(-1, -3)))
    assert plus.m == minus.m == 5
    assert decide_qbrauer(QBrauerParams(0, NotRootOfUnity(), SignedPower(-1, 3))).m == 4
    # q = +-1 reduces to the classical decision
    pm = decide_qbrauer(QBrauerParams(0, PlusMinusOne(IntegerDelta(2)), GenericR()))
    assert pm == decide_brauer(BrauerParams(0, IntegerDelta(2)))


def test_decide_bmw_cases():
    assert decide_bmw(BMWParams(0, NotRootOfUnity(), GenericR())).m is UNBOUNDED
    assert decide_bmw(BMWParams(0, RootOfUnity(RootSpec(9, 9)), GenericR())).m == 8
    v = decide_bmw(BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(-1, -2)))
    assert v.m == 4 and v.normalized == (("eps", -1), ("N", -2))
    assert [c.value for c in v.constituents] == [4, 4, UNBOUNDED, 4]
    assert decide_bmw(BMWParams(0, NotRootOfUnity(), SignedPower(-1, 4))).m == 2
    assert decide_bmw(BMWParams(0, NotRootOfUnity(), SignedPower(1, -2))).m == 2
    # normalization folds the sign through q^e = -1
    a = decide_bmw(BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(1, 3)))
    assert dict(a.normalized) == {"eps": -1, "N": -2}
    assert a.m == v.m


def test_decide_char_two_merges_signs():
    a = decide_bmw(BMWParams(2, NotRootOfUnity(), SignedPower(1, 3)))
    b = decide_bmw(BMWParams(2, NotRootOfUnity(), SignedPower(-1, 3)))
    assert a.m == b.m
    # in characteristic 2 the diagonal b-condition applies for either sign
    assert any(c.name.startswith("m3") for c in a.constituents)


def test_decide_witnesses_have_vanishing_weights():
    cases = (
        (decide_brauer, BrauerParams(0, IntegerDelta(2))),
        (decide_brauer, BrauerParams(5, IntegerDelta(2))),
        (decide_qbrauer, QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(1, -3))),
        (decide_qbrauer, QBrauerParams(0, NotRootOfUnity(), SignedPower(-1, 3))),
        (decide_bmw, BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(-1, -2))),
        (decide_bmw, BMWParams(0, NotRootOfUnity(), SignedPower(-1, 4))),
        (decide_bmw, BMWParams(0, NotRootOfUnity(), SignedPower(1, -2))),
        (decide_bmw, BMWParams(2, NotRootOfUnity(), SignedPower(1, 3))),
    )
    for decide, spec in cases:
        verdict = decide(spec)
        assert verdict.witness is not None
        la, box = verdict.witness
        assert size(la) == verdict.m
        value = evaluate_weight(la, spec)
        assert value.evaluable and value.is_zero


def test_decide_rejects_degenerate_parameters():
    with pytest.raises(ParameterError):
        decide_brauer(BrauerParams(0, IntegerDelta(0)))
    with pytest.raises(ParameterError):
        decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(1, 0)))
    with pytest.raises(ParameterError):
        decide_bmw(BMWParams(0, NotRootOfUnity(), SignedPower(1, 0)))


def test_worked_grid_spot_checks():
    # odd e, f = e: min{e-1, (e-N)/2+1, -N+3, N+e+1}
    for e, N in ((5, -1), (7, -3), (13, -11)):
        want = min(e - 1, (e - N) // 2 + 1, -N + 3, N + e + 1)
        got = decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(e, e)), SignedPower(1, N))).m
        assert got == want
    # even e, f = 2e: min{e-1, -N+3, N+e+1}
    for e, N in ((4, -1), (8, -5), (12, -11)):
        want = min(e - 1, -N + 3, N + e + 1)
        got = decide_qbrauer(QBrauerParams(0, RootOfUnity(RootSpec(e, 2 * e)), SignedPower(1, N))).m
        assert got == want
    # BMW, odd e, f = 2e, eps = -1, even N: min{e-1, N+e+1, -N+3, N/2+e}
    for e, N in ((5, -2), (7, 0), (13, -8)):
        want = min(e - 1, N + e + 1, -N + 3, N // 2 + e)
        got = decide_bmw(BMWParams(0, RootOfUnity(RootSpec(e, 2 * e)), SignedPower(-1, N))).m
        assert got == want
