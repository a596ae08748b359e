"""Exact scalar arithmetic: Laurent polynomials, rational functions, F_p.

Everything downstream (weights, Gram matrices, decision procedures) is exact,
so the scalar layer never touches floating point.  Rational numbers are
`fractions.Fraction`.  Laurent polynomials in one variable are sparse maps
exponent -> Fraction; rational functions keep an unreduced numerator /
denominator pair (arithmetic and equality never compute gcds; equality is by
cross-multiplication, and `normalize` produces the canonical reduced form on
demand).

Root-of-unity data is carried by RootSpec(e, f): f is the multiplicative
order of q and e = e(q) is the least d >= 1 with [d]_q = 0, i.e. the order of
q^2.  For a field element these satisfy f = 2e, or f = e with e odd, but the
pair is deliberately not constrained to that (the decision-theory sweep
exercises raw (e, f) combinations).  All conditions of the form
eps * q^x = +-1 reduce to congruences mod f via the two signed_power helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact scalar, got {type(x).__name__}")


class LaurentPoly:
    """A Laurent polynomial sum c_k * v^k with Fraction coefficients.

    Instances are immutable; the variable name is a tag and two polynomials
    only combine when their tags agree (constants are variable-agnostic).
    """

    __slots__ = ("variable", "coeffs")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]], variable: str = "q"):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, Fraction] = {}
        for k, c in items:
            c = _as_fraction(c)
            if c:
                clean[k] = clean.get(k, Fraction(0)) + c
                if not clean[k]:
                    del clean[k]
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "variable", variable)

    def __setattr__(self, *args):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar, variable: str = "q") -> "LaurentPoly":
        return cls({0: c}, variable)

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1, variable: str = "q") -> "LaurentPoly":
        return cls({exp: coeff}, variable)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return all(k == 0 for k in self.coeffs)

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def min_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def _merge_variable(self, other: "LaurentPoly") -> str:
        if self.variable == other.variable or other.is_constant:
            return self.variable
        if self.is_constant:
            return other.variable
        raise ValueError(f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.variable)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        var = self._merge_variable(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return LaurentPoly(out, var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.coeffs.items()}, self.variable)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return -(self - other)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        var = self._merge_variable(other)
        out: dict[int, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return LaurentPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial:
                raise ValueError("negative powers need a monomial (unit)")
            ((k, c),) = self.coeffs.items()
            return LaurentPoly.monomial(k * n, Fraction(1) / c ** (-n), self.variable)
        out = LaurentPoly.constant(1, self.variable)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.is_constant or other.is_constant or self.variable == other.variable

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.coeffs.get(0, Fraction(0)))
        return hash((self.variable, tuple(sorted(self.coeffs.items()))))

    def shift(self, k: int) -> "LaurentPoly":
        """Returns v^k * self."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()}, self.variable)

    def evaluate(self, point: Scalar) -> Fraction:
        """Substitutes a nonzero rational point for the variable."""
        point = _as_fraction(point)
        if not point and any(k < 0 for k in self.coeffs):
            raise ZeroDivisionError("cannot evaluate negative powers at 0")
        return sum((c * point**k for k, c in self.coeffs.items()), Fraction(0))

    def _ordinary(self) -> tuple[int, list[Fraction]]:
        """Returns (shift, coefficient list low-to-high) with list[0] != 0."""
        if self.is_zero:
            return 0, []
        lo, hi = self.min_exp(), self.max_exp()
        return lo, [self.coeffs.get(k, Fraction(0)) for k in range(lo, hi + 1)]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Returns self / other, raising ValueError when it does not divide."""
        other = self._coerce(other)
        if other is None or other.is_zero:
            raise ValueError("division by zero polynomial")
        var = self._merge_variable(other)
        if self.is_zero:
            return LaurentPoly({}, var)
        lo_n, num = self._ordinary()
        lo_d, den = other._ordinary()
        if len(num) < len(den):
            raise ValueError("does not divide (degree)")
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        rem = list(num)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(den) - 1] / den[-1]
            quot[i] = c
            if c:
                for j, d in enumerate(den):
                    rem[i + j] -= c * d
        if any(rem):
            raise ValueError("does not divide (remainder)")
        return LaurentPoly({lo_n - lo_d + i: c for i, c in enumerate(quot)}, var)

    def deflate(self, point: Scalar) -> tuple[int, "LaurentPoly"]:
        """Returns (m, g) with self = (v - point)^m * v^shift * g', g(point) != 0.

        Only the multiplicity at a nonzero point is meaningful for Laurent
        polynomials; the returned g carries the original power-of-v unit.
        """
        point = _as_fraction(point)
        if not point:
            raise ValueError("deflation point must be nonzero")
        if self.is_zero:
            raise ValueError("cannot deflate the zero polynomial")
        lo, coeffs = self._ordinary()
        mult = 0
        while True:
            # synthetic division of sum coeffs[i] v^i by (v - point)
            acc = Fraction(0)
            for c in reversed(coeffs):
                acc = acc * point + c
            if acc:
                break
            new = [Fraction(0)] * (len(coeffs) - 1)
            carry = Fraction(0)
            for i in range(len(coeffs) - 1, 0, -1):
                carry = coeffs[i] + carry * point
                new[i - 1] = carry
            coeffs = new
            mult += 1
        return mult, LaurentPoly({lo + i: c for i, c in enumerate(coeffs)}, self.variable)

    def content_and_sign(self) -> Fraction:
        """Returns s with self / s having coprime integer coefficients and a
        positive leading (highest-exponent) coefficient."""
        if self.is_zero:
            raise ValueError("zero polynomial has no content")
        from math import gcd, lcm

        nums = gcd(*(abs(c.numerator) for c in self.coeffs.values()))
        dens = lcm(*(c.denominator for c in self.coeffs.values()))
        c = Fraction(nums, dens)
        if self.coeffs[self.max_exp()] < 0:
            c = -c
        return c

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                term = str(c)
            else:
                v = self.variable if k == 1 else f"{self.variable}^{k}"
                if c == 1:
                    term = v
                elif c == -1:
                    term = f"-{v}"
                else:
                    term = f"{c}*{v}"
            parts.append(term)
        out = " + ".join(parts).replace("+ -", "- ")
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Returns the monic gcd (lowest exponent 0) of two Laurent polynomials."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    var = a.variable if not a.is_constant else b.variable

    def poly_of(p: LaurentPoly) -> list[Fraction]:
        return p._ordinary()[1]

    fa, fb = (poly_of(a), poly_of(b)) if not a.is_zero else ([], [])
    if a.is_zero:
        fb = poly_of(b)
    elif b.is_zero:
        fa, fb = poly_of(a), []
    else:
        fa, fb = poly_of(a), poly_of(b)
    while fb:
        # remainder of fa mod fb
        rem = list(fa)
        while len(rem) >= len(fb) and any(rem):
            c = rem[-1] / fb[-1]
            off = len(rem) - len(fb)
            for j, d in enumerate(fb):
                rem[off + j] -= c * d
            while rem and not rem[-1]:
                rem.pop()
        while rem and not rem[-1]:
            rem.pop()
        fa, fb = fb, rem
    # strip leading/trailing zeros and make monic with lowest exponent 0
    lead = fa[-1]
    lo = next(i for i, c in enumerate(fa) if c)
    return LaurentPoly({i - lo: c / lead for i, c in enumerate(fa) if c}, var)


class RationalFunction:
    """A quotient of Laurent polynomials, kept unreduced.

    Arithmetic cross-multiplies without computing gcds; `normalize` reduces to
    the canonical representative: gcd removed, denominator shifted to lowest
    exponent 0, scaled to coprime integer coefficients with positive leading
    coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.constant(1, num.variable)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        num._merge_variable(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def constant(cls, c: Scalar, variable: str = "q") -> "RationalFunction":
        return cls(LaurentPoly.constant(c, variable))

    @property
    def variable(self) -> str:
        return self.num.variable if not self.num.is_constant else self.den.variable

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other, self.variable)
        return None

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return -(self - other)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("cannot invert zero")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        n = self.normalize()
        return hash((tuple(sorted(n.num.coeffs.items())), tuple(sorted(n.den.coeffs.items()))))

    def normalize(self) -> "RationalFunction":
        """Returns the canonical reduced representative."""
        if self.num.is_zero:
            return RationalFunction(LaurentPoly({}, self.variable), LaurentPoly.constant(1, self.variable))
        g = laurent_gcd(self.num, self.den)
        num = self.num.exact_div(g)
        den = self.den.exact_div(g)
        k = den.min_exp()
        den = den.shift(-k)
        num = num.shift(-k)
        s = den.content_and_sign()
        return RationalFunction(num * (1 / s), den * (1 / s))

    def evaluate(self, point: Scalar) -> Fraction:
        """Evaluates at a rational point, cancelling any shared zero.

        Raises ZeroDivisionError if the point is a genuine pole.  At 0 the
        shared zero is a power of the variable itself (vanishing-order
        comparison on the minimal exponents).
        """
        if self.is_zero:
            return Fraction(0)
        point = _as_fraction(point)
        if not point:
            m_num, m_den = self.num.min_exp(), self.den.min_exp()
            if m_num < m_den:
                raise ZeroDivisionError("pole at 0")
            if m_num > m_den:
                return Fraction(0)
            return self.num.shift(-m_num).evaluate(0) / self.den.shift(-m_den).evaluate(0)
        m_num, num = self.num.deflate(point)
        m_den, den = self.den.deflate(point)
        if m_num < m_den:
            raise ZeroDivisionError(f"pole at {point}")
        if m_num > m_den:
            return Fraction(0)
        return num.evaluate(point) / den.evaluate(point)

    def __str__(self) -> str:
        if self.den == LaurentPoly.constant(1, self.variable):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


class PrimeFieldElement:
    """An element of F_p for a prime p, with field arithmetic."""

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int):
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, *args):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other) -> "PrimeFieldElement | None":
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed characteristics {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(self.p, other)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in F_{self.p}")
            return PrimeFieldElement(self.p, other.numerator * pow(other.denominator, -1, self.p))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElement(self.p, self.value * pow(other.value, -1, self.p))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0 and self.value == 0:
            raise ZeroDivisionError("cannot invert 0")
        return PrimeFieldElement(self.p, pow(self.value, n, self.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __repr__(self):
        return f"PrimeFieldElement({self.p}, {self.value})"


@dataclass(frozen=True)
class RootSpec:
    """Order data for q a root of unity: f = ord(q), e = ord(q^2) = e(q).

    Any e >= 2 with f in {e, 2e} is accepted; `field_consistent` flags the
    pairs that can come from an actual field element (f = 2e always works,
    f = e forces e odd).
    """

    e: int
    f: int

    def __post_init__(self):
        if self.e < 2:
            raise ValueError(f"e must be >= 2, got {self.e}")
        if self.f not in (self.e, 2 * self.e):
            raise ValueError(f"f must be e or 2e, got e={self.e}, f={self.f}")

    @property
    def field_consistent(self) -> bool:
        return self.f == 2 * self.e or self.e % 2 == 1


def signed_power_is_one(eps: int, x: int, spec: RootSpec, char2: bool = False) -> bool:
    """Whether eps * q^x = 1 for q of order f (eps in {+1, -1}).

    In characteristic 2 the sign is invisible, so the condition is f | x.
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +-1, got {eps}")
    if char2 or eps == 1:
        return x % spec.f == 0
    return spec.f % 2 == 0 and x % spec.f == spec.f // 2


def signed_power_is_minus_one(eps: int, x: int, spec: RootSpec, char2: bool = False) -> bool:
    """Whether eps * q^x = -1 for q of order f (eps in {+1, -1})."""
    if eps not in (1, -1):
        raise ValueError(f"eps must be +-1, got {eps}")
    if char2 or eps == -1:
        return x % spec.f == 0
    return spec.f % 2 == 0 and x % spec.f == spec.f // 2


def qint(d: int, variable: str = "q") -> LaurentPoly:
    """Returns the q-integer [d] = (q^d - q^-d)/(q - q^-1) symbolically.

    [d] = q^(d-1) + q^(d-3) + ... + q^(1-d); [-d] = -[d] and [0] = 0.
    """
    if d < 0:
        return -qint(-d, variable)
    return LaurentPoly({d - 1 - 2 * k: 1 for k in range(d)}, variable)


def qint_at_pm_one(d: int, sign: int) -> int:
    """Returns [d]_q at q = 1 (d) or q = -1 ((-1)^d * d, by convention).

    The q = -1 value is a definition, not the limit of the symbolic quotient
    (the limit is (-1)^(d-1) * d); only its vanishing matters downstream.
    """
    if sign == 1:
        return d
    if sign == -1:
        return d if d % 2 == 0 else -d
    raise ValueError(f"sign must be +-1, got {sign}")


def e_of_q(q: "RootSpec | int", characteristic: int = 0) -> int | None:
    """Returns e(q), the least d >= 1 with [d]_q = 0, or None if unbounded.

    q is either a RootSpec or the literal +-1; for q = +-1 the q-integer [d]
    is +-d, which vanishes first at d = p in characteristic p and never in
    characteristic 0.
    """
    if isinstance(q, RootSpec):
        return q.e
    if q in (1, -1):
        return characteristic if characteristic else None
    raise ValueError("q must be a RootSpec or +-1")


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the small moduli here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    """Returns a generator of the multiplicative group of F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def prime_field_root_of_unity(f: int, avoid: tuple[int, ...] = ()) -> tuple[int, PrimeFieldElement]:
    """Returns (p, q0) with p prime, p not in `avoid`, and q0 of order exactly f in F_p.

    Picks the smallest prime p = 1 (mod f) not excluded; such primes exist by
    Dirichlet, and in practice show up within a few multiples of f.
    """
    if f < 1:
        raise ValueError(f"order must be positive, got {f}")
    p = f + 1
    while True:
        if is_prime(p) and p not in avoid and p > 2:
            g = primitive_root(p)
            q0 = pow(g, (p - 1) // f, p)
            return p, PrimeFieldElement(p, q0)
        p += f
