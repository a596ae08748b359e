"""Brauer diagrams and the diagram algebra Br_n(delta).

A diagram on n strands is a perfect matching of 2n vertices: top vertices
1..n and bottom vertices 1..n, stored 0-based as a partner array of length
2n (top i at index i-1, bottom i at index n+i-1).  The product a * b stacks
a over b (a's bottom row glued to b's top row) and multiplies by delta per
closed loop removed.  Permutation diagrams join bottom i to top pi(i), so
perm_diagram(p) * perm_diagram(q) = perm_diagram(p o q).

The module also provides the tower structure used by the Markov trace:
embed (add a vertical strand on the right), closure (join the last top and
bottom vertices; a strand there closes into a delta loop), the conditional
expectation delta^-1 * closure, and the trace tr(d) = delta^(c(d) - n) where
c(d) counts the cycles of the matching together with the identity matching.
Every diagram factors as u * pi * ex(n, s) * v^-1 with u, v in the coset set
D(n, s), pi a permutation of the leftmost ell = n - 2s strands, and ex(n, s)
the diagram with s nested-free arcs on the rightmost positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator

from .branching import double_factorial_odd

Perm = tuple[int, ...]  # one-line notation, 1-based values


@dataclass(frozen=True)
class BrauerDiagram:
    """A perfect matching of n top and n bottom vertices (partner array)."""

    matching: tuple[int, ...]

    def __post_init__(self):
        m = self.matching
        if len(m) % 2:
            raise ValueError("matching must have even length")
        for i, p in enumerate(m):
            if not 0 <= p < len(m) or p == i or m[p] != i:
                raise ValueError(f"not a fixed-point-free involution: {m}")

    @property
    def n(self) -> int:
        return len(self.matching) // 2

    @property
    def through_count(self) -> int:
        """Number of strands joining the top row to the bottom row."""
        return sum(1 for i in range(self.n) if self.matching[i] >= self.n)

    def top_arcs(self) -> tuple[tuple[int, int], ...]:
        """Top-to-top arcs as 1-based (lo, hi) pairs sorted by lo."""
        n = self.n
        return tuple(
            (i + 1, self.matching[i] + 1)
            for i in range(n)
            if i < self.matching[i] < n
        )

    def bottom_arcs(self) -> tuple[tuple[int, int], ...]:
        """Bottom-to-bottom arcs as 1-based (lo, hi) pairs sorted by lo."""
        n = self.n
        return tuple(
            (i - n + 1, self.matching[i] - n + 1)
            for i in range(n, 2 * n)
            if i < self.matching[i]
        )

    def __str__(self) -> str:
        n = self.n

        def name(v: int) -> str:
            return str(v + 1) if v < n else f"{v - n + 1}'"

        pairs = [
            f"({name(i)},{name(self.matching[i])})"
            for i in range(2 * n)
            if i < self.matching[i]
        ]
        return "".join(pairs) if pairs else "()"


def diagram_from_pairs(n: int, pairs) -> BrauerDiagram:
    """Builds a diagram from 0-based vertex pairs covering 0..2n-1."""
    m = [-1] * (2 * n)
    for x, y in pairs:
        m[x], m[y] = y, x
    return BrauerDiagram(tuple(m))


def identity_diagram(n: int) -> BrauerDiagram:
    return diagram_from_pairs(n, [(i, n + i) for i in range(n)])


def perm_diagram(p: Perm) -> BrauerDiagram:
    """The diagram of a permutation: bottom i joined to top p(i)."""
    n = len(p)
    return diagram_from_pairs(n, [(p[i] - 1, n + i) for i in range(n)])


def perm_compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def perm_extend(p: Perm, n: int) -> Perm:
    """Extends a permutation of 1..len(p) to 1..n by fixed points."""
    if len(p) > n:
        raise ValueError(f"cannot extend length-{len(p)} permutation to {n}")
    return p + tuple(range(len(p) + 1, n + 1))


def generator(kind: str, j: int, n: int) -> BrauerDiagram:
    """The diagram generator e_j (arcs {j, j+1} top and bottom) or s_j
    (transposition of strands j, j+1), for 1 <= j <= n-1."""
    if not 1 <= j <= n - 1:
        raise ValueError(f"generator index {j} out of range for n={n}")
    if kind == "e":
        pairs = [(j - 1, j), (n + j - 1, n + j)]
        pairs += [(i, n + i) for i in range(n) if i not in (j - 1, j)]
        return diagram_from_pairs(n, pairs)
    if kind == "s":
        swap = list(range(1, n + 1))
        swap[j - 1], swap[j] = swap[j], swap[j - 1]
        return perm_diagram(tuple(swap))
    raise ValueError(f"unknown generator kind {kind!r}")


def ex_diagram(n: int, s: int) -> BrauerDiagram:
    """e_(l+1) * e_(l+3) * ... * e_(n-1) with l = n - 2s: s arcs on the right."""
    ell = n - 2 * s
    if s < 0 or ell < 0:
        raise ValueError(f"need 0 <= s <= n/2, got n={n}, s={s}")
    pairs = [(i, n + i) for i in range(ell)]
    for k in range(s):
        a = ell + 2 * k
        pairs += [(a, a + 1), (n + a, n + a + 1)]
    return diagram_from_pairs(n, pairs)


def compose_diagrams(a: BrauerDiagram, b: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stacks a over b; returns the resulting diagram and the number of
    closed loops removed."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    n = a.n
    used: set[tuple[str, frozenset[int]]] = set()

    def follow(layer: str, idx: int) -> tuple[str, int]:
        # `idx` is a vertex of `layer`'s diagram whose edge we are about to use
        while True:
            d = a if layer == "a" else b
            p = d.matching[idx]
            used.add((layer, frozenset((idx, p))))
            if layer == "a":
                if p < n:
                    return ("t", p)
                layer, idx = "b", p - n
            else:
                if p >= n:
                    return ("b", p - n)
                layer, idx = "a", n + p

    partner: dict[tuple[str, int], tuple[str, int]] = {}
    for i in range(n):
        if ("t", i) not in partner:
            end = follow("a", i)
            partner[("t", i)], partner[end] = end, ("t", i)
    for j in range(n):
        if ("b", j) not in partner:
            end = follow("b", n + j)
            partner[("b", j)], partner[end] = end, ("b", j)

    loops = 0
    for m0 in range(n):
        if ("a", frozenset((n + m0, a.matching[n + m0]))) in used:
            continue
        loops += 1
        layer, idx = "a", n + m0
        while True:
            d = a if layer == "a" else b
            p = d.matching[idx]
            key = (layer, frozenset((idx, p)))
            if key in used:
                break
            used.add(key)
            layer, idx = ("b", p - n) if layer == "a" else ("a", n + p)

    def vid(v: tuple[str, int]) -> int:
        return v[1] if v[0] == "t" else n + v[1]

    pairs = [(vid(v), vid(w)) for v, w in partner.items() if vid(v) < vid(w)]
    return diagram_from_pairs(n, pairs), loops


def involute_diagram(d: BrauerDiagram) -> BrauerDiagram:
    """The anti-automorphism *: reflect top-to-bottom."""
    n = d.n

    def flip(v: int) -> int:
        return v + n if v < n else v - n

    return diagram_from_pairs(n, [(flip(i), flip(d.matching[i])) for i in range(n * 2) if i < d.matching[i]])


def embed_diagram(d: BrauerDiagram) -> BrauerDiagram:
    """iota: add a vertical strand at position n+1."""
    n = d.n

    def remap(v: int) -> int:
        return v if v < n else v + 1

    pairs = [(remap(i), remap(d.matching[i])) for i in range(2 * n) if i < d.matching[i]]
    pairs.append((n, 2 * n + 1))
    return diagram_from_pairs(n + 1, pairs)


def closure_diagram(d: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Joins top n to bottom n; returns (diagram on n-1 strands, loops).

    A vertical strand at position n closes into one loop; cl(iota(x)) is
    delta * x at the element level.
    """
    n = d.n
    if n == 0:
        raise ValueError("cannot close the empty diagram")
    t_last, b_last = n - 1, 2 * n - 1

    def remap(v: int) -> int:
        return v if v < n else v - 1

    if d.matching[t_last] == b_last:
        pairs = [
            (remap(i), remap(d.matching[i]))
            for i in range(2 * n)
            if i < d.matching[i] and i != t_last
        ]
        return diagram_from_pairs(n - 1, pairs), 1
    x, y = d.matching[t_last], d.matching[b_last]
    pairs = [
        (remap(i), remap(d.matching[i]))
        for i in range(2 * n)
        if i < d.matching[i] and t_last not in (i, d.matching[i]) and b_last not in (i, d.matching[i])
    ]
    pairs.append((remap(x), remap(y)))
    return diagram_from_pairs(n - 1, pairs), 0


def full_closure_cycles(d: BrauerDiagram) -> int:
    """Number of loops after closing every top i with bottom i."""
    n = d.n
    seen = [False] * (2 * n)
    cycles = 0
    for v0 in range(2 * n):
        if seen[v0]:
            continue
        cycles += 1
        v = v0
        while not seen[v]:
            seen[v] = True
            w = d.matching[v]
            seen[w] = True
            v = w + n if w < n else w - n
    return cycles


@cache
def all_diagrams(n: int) -> tuple[BrauerDiagram, ...]:
    """All (2n-1)!! diagrams, sorted by through-strand count (descending)
    then by partner array; this is the Gram matrix basis order."""

    def matchings(verts: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not verts:
            yield []
            return
        first, rest = verts[0], verts[1:]
        for k, second in enumerate(rest):
            for sub in matchings(rest[:k] + rest[k + 1 :]):
                yield [(first, second)] + sub

    ds = [diagram_from_pairs(n, pairs) for pairs in matchings(tuple(range(2 * n)))]
    ds.sort(key=lambda d: (-d.through_count, d.matching))
    assert len(ds) == double_factorial_odd(n)
    return tuple(ds)


class AlgebraElement:
    """A finite linear combination of Brauer diagrams on n strands.

    Coefficients may be any exact scalar type (int, Fraction, LaurentPoly,
    PrimeFieldElement, RationalFunction); zero terms are dropped.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[BrauerDiagram, object] | None = None):
        clean = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise ValueError(f"diagram on {d.n} strands in an n={n} element")
            if not _is_zero(c):
                clean[d] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n, {})

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, coeff=1) -> "AlgebraElement":
        return cls(d.n, {d: coeff})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls.from_diagram(identity_diagram(n))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[BrauerDiagram]:
        return frozenset(self.terms)

    def coeff(self, d: BrauerDiagram):
        return self.terms.get(d, 0)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return AlgebraElement(self.n, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.n, {d: c * coeff for d, coeff in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*{d}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].matching))


def _is_zero(c) -> bool:
    try:
        return c == 0
    except TypeError:  # pragma: no cover - exotic coefficient types
        return False


def multiply(x: AlgebraElement, y: AlgebraElement, delta) -> AlgebraElement:
    """The product in Br_n(delta): stack, remove loops, multiply by delta^loops."""
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n}")
    out: dict[BrauerDiagram, object] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, loops = compose_diagrams(dx, dy)
            c = cx * cy
            if loops:
                c = c * delta**loops
            out[d] = out[d] + c if d in out else c
    return AlgebraElement(x.n, out)


def involute(x: AlgebraElement) -> AlgebraElement:
    """The algebra anti-automorphism * (coefficients are fixed)."""
    return AlgebraElement(x.n, {involute_diagram(d): c for d, c in x.terms.items()})


def embed(x: AlgebraElement) -> AlgebraElement:
    """The unital embedding iota: Br_n -> Br_(n+1)."""
    return AlgebraElement(x.n + 1, {embed_diagram(d): c for d, c in x.terms.items()})


def closure(x: AlgebraElement, delta) -> AlgebraElement:
    """cl: Br_n -> Br_(n-1), closing the last strand (delta per loop)."""
    out: dict[BrauerDiagram, object] = {}
    for d, c in x.terms.items():
        dd, loops = closure_diagram(d)
        if loops:
            c = c * delta**loops
        out[dd] = out[dd] + c if dd in out else c
    return AlgebraElement(x.n - 1, out)


def cond_exp(x: AlgebraElement, delta) -> AlgebraElement:
    """The conditional expectation E = delta^-1 * cl : Br_n -> Br_(n-1)."""
    return closure(x, delta).scale(delta**-1)


def markov_trace(x: AlgebraElement, delta):
    """tr(x) = sum of coeff * delta^(c(d) - n); tr(1) = 1."""
    total = None
    for d, c in x.terms.items():
        t = c * delta ** (full_closure_cycles(d) - x.n)
        total = t if total is None else total + t
    return 0 if total is None else total


def trace_of_diagram_exponent(d: BrauerDiagram) -> int:
    """The integer k with tr(d) = delta^k, namely c(d) - n."""
    return full_closure_cycles(d) - d.n


def _pairings(values: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Perfect matchings of a sorted tuple, arcs (lo, hi) sorted by lo."""
    if not values:
        yield ()
        return
    first, rest = values[0], values[1:]
    for k, second in enumerate(rest):
        for sub in _pairings(rest[:k] + rest[k + 1 :]):
            yield ((first, second),) + sub


@cache
def gen_D(n: int, s: int) -> tuple[Perm, ...]:
    """The coset representatives D(n, s): u(1..l) increasing on through
    values, then arcs (min, max) with minima increasing."""
    ell = n - 2 * s
    if s < 0 or ell < 0:
        raise ValueError(f"need 0 <= s <= n/2, got n={n}, s={s}")
    out = []
    for through in combinations(range(1, n + 1), ell):
        rest = tuple(sorted(set(range(1, n + 1)) - set(through)))
        for arcs in _pairings(rest):
            out.append(through + tuple(v for arc in arcs for v in arc))
    out.sort()
    assert len(out) == comb(n, ell) * double_factorial_odd(s)
    return tuple(out)


@cache
def gen_Dprime(n: int, s: int) -> tuple[Perm, ...]:
    """The variant coset set D'(n, s): arcs first, through values last."""
    ell = n - 2 * s
    if s < 0 or ell < 0:
        raise ValueError(f"need 0 <= s <= n/2, got n={n}, s={s}")
    out = []
    for through in combinations(range(1, n + 1), ell):
        rest = tuple(sorted(set(range(1, n + 1)) - set(through)))
        for arcs in _pairings(rest):
            out.append(tuple(v for arc in arcs for v in arc) + through)
    out.sort()
    assert len(out) == comb(n, ell) * double_factorial_odd(s)
    return tuple(out)


def factorize(d: BrauerDiagram) -> tuple[Perm, Perm, Perm, int]:
    """Writes d = u * pi * ex(n, s) * v^-1 (zero loops in the product).

    u, v are in gen_D(n, s) and pi permutes the leftmost ell = n - 2s
    strands: d has top arcs (u(l+2k-1), u(l+2k)), bottom arcs from v, and
    through strand bottom v(i) joined to top u(pi(i)).
    """
    n = d.n
    top_arcs = d.top_arcs()
    bottom_arcs = d.bottom_arcs()
    s = len(top_arcs)
    ell = n - 2 * s
    through_tops = sorted(i + 1 for i in range(n) if d.matching[i] >= n)
    through_bottoms = sorted(j + 1 - n for j in range(n, 2 * n) if d.matching[j] < n)
    u = tuple(through_tops) + tuple(v for arc in top_arcs for v in arc)
    v = tuple(through_bottoms) + tuple(w for arc in bottom_arcs for w in arc)
    pi = []
    for i in range(ell):
        beta = v[i]  # 1-based bottom vertex
        tau = d.matching[n + beta - 1] + 1  # its 1-based top partner
        pi.append(through_tops.index(tau) + 1)
    return u, tuple(pi), v, s


def recompose(u: Perm, pi: Perm, v: Perm, s: int) -> tuple[BrauerDiagram, int]:
    """Multiplies u * pi * ex(n, s) * v^-1, returning (diagram, total loops).

    The factorization of any diagram recomposes to it with zero loops.
    """
    n = len(u)
    d1, l1 = compose_diagrams(perm_diagram(u), perm_diagram(perm_extend(pi, n)))
    d2, l2 = compose_diagrams(d1, ex_diagram(n, s))
    d3, l3 = compose_diagrams(d2, perm_diagram(perm_inverse(v)))
    return d3, l1 + l2 + l3


def coset_counting_identity(n: int) -> bool:
    """Checks sum over s of |D(n,s)|^2 * (n-2s)! = (2n-1)!!."""
    total = sum(
        len(gen_D(n, s)) ** 2 * factorial(n - 2 * s) for s in range(n // 2 + 1)
    )
    return total == double_factorial_odd(n)
