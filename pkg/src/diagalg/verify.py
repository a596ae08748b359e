"""Named self-check suites cross-validating the library against identities.

Each suite runs a family of exact checks (no floating point anywhere) and
returns structured results; `run_suite` dispatches by name.  Default depths
keep every suite in the seconds range; the caps can be raised through
`max_n` (interpreted per suite: diagram level or partition size).

Suites:
  counting           dimension and coset identities, factorization round-trip
  trace              Markov trace symmetry, Markov property, iterated
                     conditional expectations, weight normalization
  cellular           basis transition, triangularity, involution, ideals,
                     weak coherence of layers
  oracle-equivalence closed-form bounds against brute-force search, decision
                     witnesses against actual weight vanishing
  specialization     q = 1 degeneration of q-weights to classical weights
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .branching import double_factorial_odd, path_count, reflected_level
from .brauer import (
    AlgebraElement,
    all_diagrams,
    cond_exp,
    coset_counting_identity,
    embed,
    factorize,
    generator,
    identity_diagram,
    markov_trace,
    multiply,
    recompose,
)
from .cellular import (
    gl_basis,
    ideal_identification,
    involution_swaps_indices,
    left_action_triangular,
    transition_det,
    weak_coherence_check,
)
from .criteria import (
    decide_bmw,
    decide_brauer,
    decide_qbrauer,
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
from .exactalg import LaurentPoly, RationalFunction, RootSpec, qint
from .partitions import partitions_of, size
from .weights import (
    BMWParams,
    BrauerParams,
    IntegerDelta,
    NotRootOfUnity,
    QBrauerParams,
    RootOfUnity,
    SignedPower,
    bmw_weight_at_power,
    brauer_weight,
    evaluate_weight,
    qbrauer_weight_at_power,
)

DELTA = LaurentPoly.monomial(1, variable="delta")
_SEED = 20260814


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check inside a suite."""

    suite: str
    name: str
    passed: bool
    detail: str = ""


SUITE_NAMES = ("counting", "trace", "cellular", "oracle-equivalence", "specialization")


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(passed), detail)


def suite_counting(max_n: int = 6) -> list[CheckResult]:
    """Dimension identities and the factorization round-trip."""
    out = []
    ok = all(
        sum(path_count(x) ** 2 for x in reflected_level(n)) == double_factorial_odd(n)
        for n in range(max_n + 1)
    )
    out.append(_result("counting", f"path-count squares sum to (2n-1)!!, n <= {max_n}", ok))
    ok = all(coset_counting_identity(n) for n in range(1, max_n + 1))
    out.append(_result("counting", f"coset sizes sum to (2n-1)!!, n <= {max_n}", ok))
    n_enum = min(max_n, 6)
    ok = all(len(set(all_diagrams(n))) == double_factorial_odd(n) for n in range(n_enum + 1))
    out.append(_result("counting", f"diagram enumeration is exact, n <= {n_enum}", ok))
    n_fac = min(max_n, 4)
    ok = True
    for n in range(1, n_fac + 1):
        for d in all_diagrams(n):
            u, pi, v, s = factorize(d)
            back, loops = recompose(u, pi, v, s)
            if back != d or loops != 0:
                ok = False
    out.append(_result("counting", f"factorize/recompose round-trip, n <= {n_fac}", ok))
    return out


def _iterated_trace(x: AlgebraElement):
    """Trace computed by applying the conditional expectation down to level 0."""
    y = x
    for _ in range(x.n):
        y = cond_exp(y, DELTA)
    return y.coeff(identity_diagram(0))


def suite_trace(max_n: int = 4, pairs: int = 100) -> list[CheckResult]:
    """Markov-trace identities, all in Q(delta)."""
    out = []
    rng = random.Random(_SEED)
    ok = True
    for n in range(1, max_n + 1):
        ds = all_diagrams(n)
        for _ in range(pairs):
            a = AlgebraElement.from_diagram(rng.choice(ds))
            b = AlgebraElement.from_diagram(rng.choice(ds))
            if markov_trace(multiply(a, b, DELTA), DELTA) != markov_trace(multiply(b, a, DELTA), DELTA):
                ok = False
    out.append(_result("trace", f"tr(xy) = tr(yx), {pairs} random pairs per n <= {max_n}", ok))
    n_markov = min(max_n, 4)
    ok = True
    for n in range(1, n_markov + 1):
        ebar = AlgebraElement.from_diagram(generator("e", n, n + 1), DELTA ** -1)
        for d in all_diagrams(n):
            x = AlgebraElement.from_diagram(d)
            lhs = markov_trace(multiply(ebar, embed(x), DELTA), DELTA)
            rhs = DELTA ** -2 * markov_trace(x, DELTA)
            if lhs != rhs:
                ok = False
    out.append(_result("trace", f"tr(ebar_n x) = delta^-2 tr(x), n <= {n_markov}", ok))
    n_iter = min(max_n, 4)
    ok = True
    for n in range(n_iter + 1):
        for d in all_diagrams(n):
            x = AlgebraElement.from_diagram(d)
            if _iterated_trace(x) != markov_trace(x, DELTA):
                ok = False
    out.append(_result("trace", f"closure trace = iterated E trace, n <= {n_iter}", ok))
    n_norm = min(max_n, 5)
    ok = True
    for n in range(n_norm + 1):
        total = RationalFunction(LaurentPoly.constant(0, "delta"), LaurentPoly.constant(1, "delta"))
        for x in reflected_level(n):
            total = total + brauer_weight(x.shape) * Fraction(path_count(x))
        dn = RationalFunction(LaurentPoly.monomial(n, 1, "delta"), LaurentPoly.constant(1, "delta"))
        if total != dn:
            ok = False
    out.append(_result("trace", f"sum of path_count * weight = delta^n, n <= {n_norm}", ok))
    return out


def suite_cellular(max_n: int = 3) -> list[CheckResult]:
    """Cellular-structure checks for the diagram basis."""
    out = []
    n_det = min(max_n, 4)
    ok = all(transition_det(n) in (1, -1) for n in range(n_det + 1))
    out.append(_result("cellular", f"basis transition determinant is +-1, n <= {n_det}", ok))
    n_tri = min(max_n, 3)
    ok = all(left_action_triangular(n) for n in range(n_tri + 1))
    out.append(_result("cellular", f"left action is layer-triangular, n <= {n_tri}", ok))
    ok = all(involution_swaps_indices(n) for n in range(n_tri + 1))
    out.append(_result("cellular", f"involution swaps tableau indices, n <= {n_tri}", ok))
    ok = all(ideal_identification(n) for n in range(n_tri + 1))
    out.append(_result("cellular", f"lower layers = ideal of e_(n-1), n <= {n_tri}", ok))
    n_coh = min(max_n, 4)
    ok = True
    for n in range(n_coh + 1):
        for m in range(n % 2, n + 1, 2):
            if (n - m) // 2 > 2:
                continue
            for label in reflected_level(m):
                members = [c.element for c in gl_basis(m) if c.label == label]
                if not members:
                    members = [AlgebraElement.one(0)] if m == 0 else []
                for x in members[:2]:
                    if not weak_coherence_check(x, label, n):
                        ok = False
    out.append(_result("cellular", f"weak coherence of layers, k <= 2, n <= {n_coh}", ok))
    return out


def suite_oracle_equivalence(max_n: int = 10) -> list[CheckResult]:
    """Closed-form bounds against brute-force search; witnesses against
    actual weight vanishing."""
    out = []
    limit = 2 * max_n + 10
    ok = True
    for x in range(-max_n, max_n + 1):
        if x != 0:
            for fn, kind in ((m0, 0), (m1, 1), (m2, 2)):
                if fn(x) != m_bruteforce(kind, x, limit)[0]:
                    ok = False
        if m3(x) != m_bruteforce(3, x, limit)[0]:
            ok = False
    out.append(_result("oracle-equivalence", f"m0/m1/m2/m3 closed form = search, |arg| <= {max_n}", ok))
    ok = True
    e_cap = min(max_n, 8)
    for e in range(2, e_cap + 1):
        for f in (e, 2 * e):
            rs = RootSpec(e, f)
            for N in range(-e + 1, 1):
                if m1p(N, e) != mprime_bruteforce(1, N, 1, rs, False, limit)[0]:
                    ok = False
                for eps in (1, -1):
                    for char2 in (False, True):
                        if m2p(N, eps, rs, char2) != mprime_bruteforce(2, N, eps, rs, char2, limit)[0]:
                            ok = False
                        if m3p(N, eps, rs, char2) != mprime_bruteforce(3, N, eps, rs, char2, limit)[0]:
                            ok = False
    out.append(_result("oracle-equivalence", f"m1'/m2'/m3' closed form = search, e <= {e_cap}", ok))
    ok = True
    cases = (
        (decide_brauer, BrauerParams(0, IntegerDelta(2))),
        (decide_brauer, BrauerParams(5, IntegerDelta(2))),
        (decide_qbrauer, QBrauerParams(0, RootOfUnity(RootSpec(7, 7)), SignedPower(1, -3))),
        (decide_qbrauer, QBrauerParams(0, NotRootOfUnity(), SignedPower(-1, 3))),
        (decide_bmw, BMWParams(0, RootOfUnity(RootSpec(5, 10)), SignedPower(-1, -2))),
        (decide_bmw, BMWParams(0, NotRootOfUnity(), SignedPower(-1, 4))),
        (decide_bmw, BMWParams(0, NotRootOfUnity(), SignedPower(1, -2))),
    )
    for decide, spec in cases:
        verdict = decide(spec)
        if verdict.witness is None:
            ok = False
            continue
        la, box = verdict.witness
        value = evaluate_weight(la, spec)
        if not (value.evaluable and value.is_zero and size(la) == verdict.m):
            ok = False
    out.append(_result("oracle-equivalence", "decision witnesses have vanishing weights", ok))
    return out


def suite_specialization(max_n: int = 5) -> list[CheckResult]:
    """q = 1 degenerations and the q-analogue of the normalization."""
    out = []
    qb_cap = min(max_n, 6)
    bmw_cap = min(max_n, 5)
    ok = True
    for n in range(qb_cap + 1):
        for la in partitions_of(n):
            for N in range(-5, 6):
                classical = brauer_weight(la).evaluate(N)
                if qbrauer_weight_at_power(la, N).evaluate(1) != classical:
                    ok = False
                if n <= bmw_cap and bmw_weight_at_power(la, N, 1).evaluate(1) != classical:
                    ok = False
    out.append(_result("specialization", f"weights at q = 1 match delta = N, |la| <= {qb_cap}", ok))
    ok = True
    n_norm = min(max_n, 4)
    for N in (3, 5, -4):
        delta_q = qint(N)
        for n in range(n_norm + 1):
            total = RationalFunction(LaurentPoly.constant(0, "q"), LaurentPoly.constant(1, "q"))
            for x in reflected_level(n):
                total = total + qbrauer_weight_at_power(x.shape, N) * Fraction(path_count(x))
            dn = RationalFunction(delta_q, LaurentPoly.constant(1, "q")) ** n
            if total != dn:
                ok = False
    out.append(_result("specialization", f"q-weight normalization at delta = [N], n <= {n_norm}", ok))
    return out


def run_suite(name: str, max_n: int | None = None) -> list[CheckResult]:
    """Runs one suite by name (see SUITE_NAMES); max_n overrides the default depth."""
    table = {
        "counting": suite_counting,
        "trace": suite_trace,
        "cellular": suite_cellular,
        "oracle-equivalence": suite_oracle_equivalence,
        "specialization": suite_specialization,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    fn = table[name]
    return fn() if max_n is None else fn(max_n)


def run_all(max_n: int | None = None) -> list[CheckResult]:
    """Runs every suite in order."""
    results = []
    for name in SUITE_NAMES:
        results.extend(run_suite(name, max_n))
    return results
