"""Exact rational polynomial arithmetic and Sturm-certified real-root isolation.

Everything in this module is computed with arbitrary-precision rational
numbers; floating point never decides a comparison.  The scalar type is
``fractions.Fraction`` (always in lowest terms, positive denominator),
re-exported as :data:`Rational`.  On top of it sit dense univariate
polynomials, co-prime rational-function pairs, Sturm-sequence root counting
and bisection with certified brackets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]


class EndpointRootError(ValueError):
    """An interval endpoint is a root of the polynomial being counted."""


class CertificationError(ValueError):
    """A claimed root count or bracket could not be certified exactly."""


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse 'P/Q', integer, or decimal text into an exact rational.

    Decimal strings are read as exact scaled integers ('11.1' -> 111/10);
    binary floating point is never involved.
    """
    return Fraction(text.strip())


def rational_sign(x: RationalLike) -> int:
    x = as_rational(x)
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored lowest degree first with no trailing zeros; the
    zero polynomial has an empty coefficient tuple.  Instances are immutable
    and safe to share across threads.
    """

    coefficients: tuple[Fraction, ...]

    @staticmethod
    def from_coefficients(coeffs: Iterable[RationalLike]) -> "Polynomial":
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((Fraction(1),))

    @staticmethod
    def constant(c: RationalLike) -> "Polynomial":
        return Polynomial.from_coefficients([c])

    @staticmethod
    def variable() -> "Polynomial":
        return Polynomial((Fraction(0), Fraction(1)))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coefficients:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of t**k (zero beyond the degree)."""
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def eval(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial.from_coefficients(
            c * i for i, c in enumerate(self.coefficients) if i >= 1
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial.from_coefficients(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial.zero()
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a:
                    for j, b in enumerate(other.coefficients):
                        if b:
                            out[i + j] += a * b
            return Polynomial.from_coefficients(out)
        c = as_rational(other)
        if c == 0:
            return Polynomial.zero()
        return Polynomial(tuple(a * c for a in self.coefficients))

    def __rmul__(self, other: RationalLike) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact Euclidean division: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        div = other.coefficients
        lead = div[-1]
        qdeg = len(rem) - len(div)
        if qdeg < 0:
            return Polynomial.zero(), self
        quot = [Fraction(0)] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            c = rem[k + len(div) - 1] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(div):
                    rem[k + i] -= c * b
        return Polynomial.from_coefficients(quot), Polynomial.from_coefficients(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * (1 / self.leading_coefficient)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            if i == 0:
                term = f"{c}"
            elif i == 1:
                term = "t" if abs(c) == 1 else f"{abs(c)}*t"
            else:
                term = f"t^{i}" if abs(c) == 1 else f"{abs(c)}*t^{i}"
            if not parts:
                parts.append(term if (c > 0 or i == 0) else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def expand_linear_factors(roots: Sequence[RationalLike]) -> Polynomial:
    """Expand the product of (t + r) over the given roots, exactly."""
    if not roots:
        raise ValueError("need at least one linear factor")
    poly = Polynomial.one()
    for r in roots:
        poly = poly * Polynomial.from_coefficients([r, 1])
    return poly


def divide_out_linear(poly: Polynomial, root: RationalLike) -> Polynomial:
    """Exact division of poly by (t + root); raises if the factor does not divide."""
    root = as_rational(root)
    n = poly.degree
    if n < 1:
        raise ValueError("cannot divide a constant by a linear factor")
    out = [Fraction(0)] * n
    acc = Fraction(0)
    for i in range(n, 0, -1):
        acc = poly.coefficients[i] + acc
        out[i - 1] = acc
        acc = acc * (-root)
    if poly.coefficients[0] + acc != 0:
        raise ValueError(f"(t + {root}) does not divide the polynomial")
    return Polynomial.from_coefficients(out)


# -- primitive integer images, gcd, and Sturm chains -------------------------
#
# Remainder sequences are normalised to primitive integer coefficient lists
# after every step.  Scaling is always by a positive rational, so the sign
# pattern of the chain (which Sturm counting relies on) is preserved.


def _primitive_int(coeffs: Sequence[Fraction]) -> list[int]:
    if not coeffs:
        return []
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _prem_primitive(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive image of the rational remainder of a modulo b (sign preserved)."""
    rem = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    while rem and len(rem) >= len(b):
        c = rem[-1] / lead
        shift = len(rem) - len(b)
        for i, bc in enumerate(b):
            rem[shift + i] -= c * bc
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return _primitive_int(rem)


@lru_cache(maxsize=128)
def _sturm_chain(poly: Polynomial) -> tuple[tuple[int, ...], ...]:
    chain: list[list[int]] = [_primitive_int(poly.coefficients)]
    deriv = _primitive_int(poly.derivative().coefficients)
    if deriv:
        chain.append(deriv)
    while len(chain) >= 2:
        rem = _prem_primitive(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-v for v in rem])
    return tuple(tuple(c) for c in chain)


def _eval_int_sign(coeffs: Sequence[int], num: int, den: int) -> int:
    # den > 0, so the returned integer has the sign of the polynomial value.
    acc = coeffs[-1]
    power = 1
    for i in range(len(coeffs) - 2, -1, -1):
        power *= den
        acc = acc * num + coeffs[i] * power
    return acc


def _sign_variations(chain: Sequence[Sequence[int]], point: Fraction) -> int:
    num, den = point.numerator, point.denominator
    signs = []
    for c in chain:
        v = _eval_int_sign(c, num, den)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Polynomial, lo: RationalLike, hi: RationalLike) -> int:
    """Exact number of distinct real roots of p in the open interval (lo, hi).

    Raises EndpointRootError when an endpoint is itself a root; the caller
    should perturb that endpoint by an exact rational nudge (1/2**k for
    growing k) and retry.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p.is_zero:
        raise ValueError("root counting of the zero polynomial")
    if p.eval(lo) == 0:
        raise EndpointRootError(
            f"p({lo}) = 0; nudge the endpoint by an exact rational (e.g. 1/2**k) and retry"
        )
    if p.eval(hi) == 0:
        raise EndpointRootError(
            f"p({hi}) = 0; nudge the endpoint by an exact rational (e.g. 1/2**k) and retry"
        )
    chain = _sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """Bound B with every real root of p inside (-B, B)."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading_coefficient)
    return 1 + max(abs(c) for c in p.coefficients[:-1]) / lead


@dataclass(frozen=True)
class RootBracket:
    """Interval with opposite endpoint signs certified to contain one root."""

    lower: Fraction
    upper: Fraction
    sign_at_lower: int
    sign_at_upper: int

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ValueError("bracket needs lower < upper")
        if self.sign_at_lower not in (-1, 1) or self.sign_at_upper not in (-1, 1):
            raise ValueError("endpoint signs must be +-1")
        if self.sign_at_lower == self.sign_at_upper:
            raise ValueError("bracket endpoints must have opposite signs")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, x: RationalLike) -> bool:
        return self.lower < as_rational(x) < self.upper


def isolate_unique_root(p: Polynomial, lo: RationalLike, hi: RationalLike) -> RootBracket:
    """Certify by Sturm count that p has exactly one root in (lo, hi)."""
    lo, hi = as_rational(lo), as_rational(hi)
    count = sturm_count(p, lo, hi)
    if count != 1:
        raise CertificationError(f"expected exactly one root in ({lo}, {hi}), Sturm count is {count}")
    s_lo, s_hi = rational_sign(p.eval(lo)), rational_sign(p.eval(hi))
    if s_lo == s_hi:
        raise CertificationError("single root of even multiplicity; bisection bracket impossible")
    return RootBracket(lo, hi, s_lo, s_hi)


def bisect_root(
    value_at: Callable[[Fraction], RationalLike],
    bracket: RootBracket,
    width: RationalLike,
) -> RootBracket:
    """Shrink a certified bracket below the requested width by exact bisection.

    value_at must evaluate the bracketed function exactly (any rational
    result; only its sign is used).  Termination is guaranteed by halving.
    """
    width = as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    lo, hi = bracket.lower, bracket.upper
    s_lo, s_hi = bracket.sign_at_lower, bracket.sign_at_upper
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = rational_sign(as_rational(value_at(mid)))
        if s_mid == 0:
            # The midpoint is the root itself; return a tight symmetric bracket.
            delta = min(width, hi - mid, mid - lo) / 2
            lo2, hi2 = mid - delta, mid + delta
            s2_lo = rational_sign(as_rational(value_at(lo2)))
            s2_hi = rational_sign(as_rational(value_at(hi2)))
            if s2_lo != s_lo or s2_hi != s_hi:
                raise CertificationError("sign pattern broke around an exact rational root")
            return RootBracket(lo2, hi2, s_lo, s_hi)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return RootBracket(lo, hi, s_lo, s_hi)


# -- rational functions -------------------------------------------------------


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor, by a primitive remainder sequence."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    ca = _primitive_int(a.coefficients)
    cb = _primitive_int(b.coefficients)
    if len(ca) < len(cb):
        ca, cb = cb, ca
    while cb:
        rem = _prem_primitive(ca, cb)
        ca, cb = cb, rem
    return Polynomial.from_coefficients(ca).monic()


@dataclass(frozen=True)
class RationalFunctionPair:
    """Quotient of co-prime polynomials with a monic denominator.

    Construct through ratfun_reduce, which establishes both invariants.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        if self.denominator.leading_coefficient != 1:
            raise ValueError("denominator must be monic")

    def eval(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        den = self.denominator.eval(t)
        if den == 0:
            raise ZeroDivisionError(f"pole at t = {t}")
        return self.numerator.eval(t) / den

    def scale(self, c: RationalLike) -> "RationalFunctionPair":
        return RationalFunctionPair(self.numerator * c, self.denominator)


def ratfun_reduce(num: Polynomial, den: Polynomial) -> RationalFunctionPair:
    """Reduce num/den to a co-prime pair with monic denominator."""
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return RationalFunctionPair(Polynomial.zero(), Polynomial.one())
    g = poly_gcd(num, den)
    if g.degree > 0:
        num_q, num_r = num.divmod(g)
        den_q, den_r = den.divmod(g)
        if not (num_r.is_zero and den_r.is_zero):
            raise CertificationError("gcd does not divide exactly")
        num, den = num_q, den_q
    lead = den.leading_coefficient
    return RationalFunctionPair(num * (1 / lead), den * (1 / lead))


def log_derivative(pair: RationalFunctionPair) -> RationalFunctionPair:
    """Reduced form of (num/den)' / (num/den) = (num'*den - num*den')/(num*den)."""
    num, den = pair.numerator, pair.denominator
    return ratfun_reduce(
        num.derivative() * den - num * den.derivative(),
        num * den,
    )
