"""Semisimplicity bounds for the Brauer, q-Brauer, and BMW families.

Each algebra in the family is semisimple exactly up to a level m computed
as a minimum of simple quantities: the cap n_1 (where weights stop being
evaluable) and the first levels at which specific box statistics make a
weight factor vanish.  The m-functions are DEFINED by brute-force search
(the least n >= 2 admitting a witness box); the closed forms implemented
here are theorems, and the test suite verifies them against the search.

Box-statistic kinds (for a shape la of size n with box (i, j)):
  kind 0 - any box with d(i,j) = -arg,
  kind 1 - off-diagonal box with d(i,j) = -arg,
  kind 2 - diagonal box with d(i,i) = -arg,
  kind 3 - diagonal box with b(i,i) = -arg.
The primed variants replace equalities by congruences driven by the orders
RootSpec(e, f) of a root of unity q (and by the characteristic-2 merging of
+-1).

The decision procedures return a Verdict: the bound m, the labeled
constituents entering the min, the normalized parameters for root-of-unity
cases, and a witness (shape, box) when the bound is attained by an actual
vanishing weight rather than by the cap n_1 alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .exactalg import RootSpec, signed_power_is_minus_one, signed_power_is_one
from .partitions import Box, Partition, conjugate, partitions_of
from .weights import (
    BMWParams,
    BrauerParams,
    GenericR,
    IntegerDelta,
    NotRootOfUnity,
    ParameterError,
    PlusMinusOne,
    QBrauerParams,
    validate_params,
)


class UnboundedType:
    """The 'semisimple for all n' value; min-identity, larger than any int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unbounded"


UNBOUNDED = UnboundedType()

Bound = int | UnboundedType
Witness = tuple[Partition, Box]


def is_bounded(b) -> bool:
    return isinstance(b, int)


def bound_min(*bounds):
    """Minimum of bounds, with UNBOUNDED as the identity."""
    finite = [b for b in bounds if isinstance(b, int)]
    return min(finite) if finite else UNBOUNDED


# --- brute-force definitions -----------------------------------------------


@cache
def _box_tables(n: int) -> tuple[dict, dict, dict, dict]:
    """Per-level first-witness tables: maps from the value of a box
    statistic to (shape, box), for kinds 0..3 in order."""
    any_d: dict[int, Witness] = {}
    off_d: dict[int, Witness] = {}
    diag_d: dict[int, Witness] = {}
    diag_b: dict[int, Witness] = {}
    for la in partitions_of(n):
        conj = conjugate(la)
        for i, row_len in enumerate(la, start=1):
            for j in range(1, row_len + 1):
                if i == j:
                    dv = 2 * la[i - 1] - 2 * i
                    bv = -2 * conj[i - 1] + 2 * i - 2
                    any_d.setdefault(dv, (la, (i, j)))
                    diag_d.setdefault(dv, (la, (i, j)))
                    diag_b.setdefault(bv, (la, (i, j)))
                elif i < j:
                    lj = la[j - 1] if j <= len(la) else 0
                    dv = la[i - 1] + lj - i - j
                    any_d.setdefault(dv, (la, (i, j)))
                    off_d.setdefault(dv, (la, (i, j)))
                else:
                    ci = conj[i - 1] if i <= len(conj) else 0
                    dv = -ci - conj[j - 1] + i + j - 2
                    any_d.setdefault(dv, (la, (i, j)))
                    off_d.setdefault(dv, (la, (i, j)))
    return any_d, off_d, diag_d, diag_b


def m_bruteforce(kind: int, arg: int, search_limit: int = 40):
    """The least n >= 2 admitting a box of the given kind with statistic
    equal to -arg (so that arg + statistic = 0), with its witness; UNBOUNDED
    (witness None) if none exists up to search_limit."""
    if kind not in (0, 1, 2, 3):
        raise ParameterError(f"kind must be 0..3, got {kind}")
    if search_limit < 2:
        raise ParameterError(f"search_limit must be >= 2, got {search_limit}")
    target = -arg
    for n in range(2, search_limit + 1):
        table = _box_tables(n)[kind]
        if target in table:
            return n, table[target]
    return UNBOUNDED, None


def mprime_bruteforce(kind: int, N: int, eps: int, spec: RootSpec, char2: bool, search_limit: int = 40):
    """Congruence-driven search: least n >= 2 with a box satisfying
    kind 1: e | N + d (off-diagonal); kind 2: eps*q^(N+d(i,i)) = 1;
    kind 3: eps*q^(N+b(i,i)) = -1; with witness, else UNBOUNDED."""
    if kind not in (1, 2, 3):
        raise ParameterError(f"kind must be 1..3, got {kind}")
    for n in range(2, search_limit + 1):
        tables = _box_tables(n)
        if kind == 1:
            hit = next((w for v, w in tables[1].items() if (N + v) % spec.e == 0), None)
        elif kind == 2:
            hit = next((w for v, w in tables[2].items() if signed_power_is_one(eps, N + v, spec, char2)), None)
        else:
            hit = next((w for v, w in tables[3].items() if signed_power_is_minus_one(eps, N + v, spec, char2)), None)
        if hit is not None:
            return n, hit
    return UNBOUNDED, None


# --- closed forms ----------------------------------------------------------


def _m1_any(x: int):
    """First level with an off-diagonal box of d-value -x (x = 0 allowed)."""
    if x == 0:
        return 3
    return x + 1 if x > 0 else -x + 3


def _m2_any(x: int):
    """First level with a diagonal box of d-value -x; diagonal d-values are
    the nonnegative even integers, least size max(2, -x/2 + 1)."""
    if x > 0 or x % 2:
        return UNBOUNDED
    return max(2, -x // 2 + 1)


def _nonzero(delta: int) -> None:
    if delta == 0:
        raise ParameterError("the closed forms exclude delta = 0 (use m_bruteforce)")


def m1(delta: int):
    """-delta+3 for negative delta, delta+1 for positive."""
    _nonzero(delta)
    return _m1_any(delta)


def m2(delta: int):
    """-delta/2+1 for negative even delta, UNBOUNDED otherwise."""
    _nonzero(delta)
    return _m2_any(delta)


def m0(delta: int):
    """min(m1, m2): first level with any box of d-value -delta."""
    _nonzero(delta)
    return bound_min(_m1_any(delta), _m2_any(delta))


def m3(N: int):
    """First level with a diagonal box of b-value -N: diagonal b-values are
    the even integers <= -2, least size max(2, N/2) for positive even N."""
    if N <= 0 or N % 2:
        return UNBOUNDED
    return max(2, N // 2)


def _check_prime_range(N: int, e: int) -> None:
    if not -e < N <= 0:
        raise ParameterError(f"normalized exponent must satisfy -e < N <= 0, got N = {N}, e = {e}")


def m1p(N: int, e: int):
    """First level with an off-diagonal box with e | N + d, for -e < N <= 0:
    only the shifts N, N-e, N+e can be attained minimally."""
    _check_prime_range(N, e)
    return bound_min(_m1_any(N), _m1_any(N - e), _m1_any(N + e))


def m2p(N: int, eps: int, spec: RootSpec, char2: bool):
    """First level with a diagonal box with eps*q^(N+d) = 1.

    For eps = 1 (or characteristic 2) the condition is f | N + d; for
    eps = -1 it is N + d = f/2 mod f, impossible when f is odd."""
    _check_prime_range(N, spec.e)
    if char2 or eps == 1:
        return bound_min(_m2_any(N), _m2_any(N - spec.f))
    if spec.f % 2:
        return UNBOUNDED
    rem = (N - spec.f // 2) % spec.f
    return _m2_any(rem - spec.f if rem else 0)


def m3p(N: int, eps: int, spec: RootSpec, char2: bool):
    """First level with a diagonal box with eps*q^(N+b) = -1.

    For eps = -1 (or characteristic 2) the condition is f | N + b; for
    eps = 1 it is N + b = f/2 mod f, impossible when f is odd.  Diagonal
    b-values run over even integers <= -2, so only the first two shifts
    in the progression can attain the minimum."""
    _check_prime_range(N, spec.e)
    if char2 or eps == -1:
        return bound_min(m3(N + spec.f), m3(N + 2 * spec.f))
    if spec.f % 2:
        return UNBOUNDED
    half = spec.f // 2
    return bound_min(m3(N + half), m3(N + half + spec.f))


# --- verdicts --------------------------------------------------------------


@dataclass(frozen=True)
class Constituent:
    """One labeled bound entering the min."""

    name: str
    value: int | UnboundedType


@dataclass(frozen=True)
class Verdict:
    """The semisimplicity bound: the algebra at level n is semisimple if
    and only if n <= m (UNBOUNDED meaning: for all n)."""

    m: int | UnboundedType
    constituents: tuple[Constituent, ...]
    witness: Witness | None
    normalized: tuple[tuple[str, int], ...] = ()


def _verdict(constituents: list[tuple[str, object, object]], normalized=()) -> Verdict:
    """Builds a Verdict from (name, value, witness_probe) triples, where
    witness_probe is a zero-argument callable producing a Witness (or None
    for cap-type constituents)."""
    m = bound_min(*(value for _, value, _ in constituents))
    witness = None
    if isinstance(m, int):
        for _, value, probe in constituents:
            if value == m and probe is not None:
                witness = probe()
                break
    return Verdict(m, tuple(Constituent(nm, v) for nm, v, _ in constituents), witness, tuple(normalized))


def _brute_witness(kind: int, arg: int, expected: int):
    def probe() -> Witness:
        level, wit = m_bruteforce(kind, arg, expected)
        assert level == expected and wit is not None
        return wit

    return probe


def _brute_witness_prime(kind: int, N: int, eps: int, spec: RootSpec, char2: bool, expected: int):
    def probe() -> Witness:
        level, wit = mprime_bruteforce(kind, N, eps, spec, char2, expected)
        assert level == expected and wit is not None
        return wit

    return probe


def decide_brauer(spec: BrauerParams) -> Verdict:
    """Semisimplicity bound for the Brauer algebras Br_n(delta)."""
    validate_params(spec)
    p = spec.characteristic
    if not isinstance(spec.delta, IntegerDelta):
        if p == 0:
            return _verdict([("n0", UNBOUNDED, None)])
        return _verdict([("n1", p - 1, None), ("n0", UNBOUNDED, None)])
    N = spec.delta.value
    if p == 0:
        v = m0(N)
        return _verdict([(f"m0({N})", v, _brute_witness(0, N, v) if isinstance(v, int) else None)])
    N0 = N % p  # in (0, p); N0 = 0 is rejected by validation
    parts: list[tuple[str, object, object]] = [("n1", p - 1, None)]
    for arg in (N0, N0 - p):
        v = m0(arg)
        parts.append((f"m0({arg})", v, _brute_witness(0, arg, v) if isinstance(v, int) else None))
    return _verdict(parts, normalized=(("N", N0),))


def decide_qbrauer(spec: QBrauerParams) -> Verdict:
    """Semisimplicity bound for the q-Brauer algebras (r = +-q^N regime)."""
    validate_params(spec)
    if isinstance(spec.q, PlusMinusOne):
        return decide_brauer(BrauerParams(spec.characteristic, spec.q.delta))
    if isinstance(spec.r, GenericR):
        if isinstance(spec.q, NotRootOfUnity):
            return _verdict([("n0", UNBOUNDED, None)])
        return _verdict([("n1", spec.q.spec.e - 1, None), ("n0", UNBOUNDED, None)])
    N = spec.r.N
    if isinstance(spec.q, NotRootOfUnity):
        v = m0(N)
        return _verdict([(f"m0({N})", v, _brute_witness(0, N, v) if isinstance(v, int) else None)])
    e = spec.q.spec.e
    N0 = N % e - e  # in (-e, 0); e | N is rejected by validation
    parts: list[tuple[str, object, object]] = [("n1", e - 1, None)]
    for arg in (N0, N0 - e, N0 + e):
        v = m0(arg)
        parts.append((f"m0({arg})", v, _brute_witness(0, arg, v) if isinstance(v, int) else None))
    return _verdict(parts, normalized=(("N", N0),))


def decide_bmw(spec: BMWParams) -> Verdict:
    """Semisimplicity bound for the BMW algebras (r = eps*q^(N-1) regime)."""
    validate_params(spec)
    p = spec.characteristic
    char2 = p == 2
    if isinstance(spec.q, PlusMinusOne):
        return decide_brauer(BrauerParams(p, spec.q.delta))
    if isinstance(spec.r, GenericR):
        if isinstance(spec.q, NotRootOfUnity):
            return _verdict([("n0", UNBOUNDED, None)])
        return _verdict([("n1", spec.q.spec.e - 1, None), ("n0", UNBOUNDED, None)])
    eps, N = spec.r.eps, spec.r.N
    if char2:
        eps = 1
    if isinstance(spec.q, NotRootOfUnity):
        parts = []
        if eps == 1:
            v = m0(N)
            parts.append((f"m0({N})", v, _brute_witness(0, N, v) if isinstance(v, int) else None))
        else:
            v1, v3 = m1(N), m3(N)
            parts.append((f"m1({N})", v1, _brute_witness(1, N, v1) if isinstance(v1, int) else None))
            parts.append((f"m3({N})", v3, _brute_witness(3, N, v3) if isinstance(v3, int) else None))
        if char2:
            # +-1 coincide, so the kind-3 vanishing applies as well
            v3 = m3(N)
            parts.append((f"m3({N})", v3, _brute_witness(3, N, v3) if isinstance(v3, int) else None))
        return _verdict(parts)
    rs = spec.q.spec
    e, f = rs.e, rs.f
    rem = N % e
    N0 = rem - e if rem else 0  # in (-e, 0]
    k = (N - N0) // e
    eps0 = eps * (-1) ** k if (f == 2 * e and not char2) else eps
    v1 = m1p(N0, e)
    v2 = m2p(N0, eps0, rs, char2)
    v3 = m3p(N0, eps0, rs, char2)
    parts = [
        ("n1", e - 1, None),
        (f"m1'({N0})", v1, _brute_witness_prime(1, N0, eps0, rs, char2, v1) if isinstance(v1, int) else None),
        (f"m2'({N0})", v2, _brute_witness_prime(2, N0, eps0, rs, char2, v2) if isinstance(v2, int) else None),
        (f"m3'({N0})", v3, _brute_witness_prime(3, N0, eps0, rs, char2, v3) if isinstance(v3, int) else None),
    ]
    return _verdict(parts, normalized=(("eps", eps0), ("N", N0)))
