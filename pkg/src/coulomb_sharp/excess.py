"""The named functions of the excess-factor analysis, built exactly.

Q is the excess factor of the shifted Coulomb family (count over
semiclassical bound, as a function of the level variable), A its analogue in
the conjectured optimal bound for arbitrary potentials, f and g their
logarithmic derivatives, h_a the pole-splitting squeeze used for odd
dimension, and G the summation bound behind the improved order-1 estimate.
Pochhammer products drive the exact summations.

All rational-function forms are produced by summing partial fractions over a
common denominator and reducing by polynomial gcd; evaluation at rational
points is exact.  Odd-dimension irrationality is dodged systematically by
squaring: A**2 and G**2 are rational functions, so every order comparison
against a rational threshold is decided exactly on squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    Polynomial,
    RationalFunctionPair,
    RationalLike,
    as_rational,
    divide_out_linear,
    expand_linear_factors,
    log_derivative,
    ratfun_reduce,
)
from .highprec import HighPrecisionReal, sqrt_of_fraction

PartialFractionTerms = Sequence[tuple[Fraction, Fraction]]


def pochhammer_eval(m: int, t: RationalLike) -> Fraction:
    """Shifted Pochhammer product (t+1)(t+2)...(t+m); equals 1 for m = 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    t = as_rational(t)
    value = Fraction(1)
    for k in range(1, m + 1):
        value *= t + k
    return value


def pochhammer_poly(m: int) -> Polynomial:
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Polynomial.one()
    return expand_linear_factors(list(range(1, m + 1)))


def partial_fraction_sum(terms: PartialFractionTerms) -> RationalFunctionPair:
    """Sum coeff/(t + root) over the given terms and reduce to co-prime form.

    The common denominator is the product over all listed factors (repeats
    included); cancellation happens only through the gcd reduction.
    """
    if not terms:
        raise ValueError("no terms")
    roots = [as_rational(r) for _, r in terms]
    common = expand_linear_factors(roots)
    num = Polynomial.zero()
    for (c, _), r in zip(terms, roots):
        num = num + divide_out_linear(common, r) * as_rational(c)
    return ratfun_reduce(num, common)


def _eval_terms(terms: PartialFractionTerms, t: Fraction) -> Fraction:
    total = Fraction(0)
    for c, r in terms:
        den = t + r
        if den == 0:
            raise ValueError(f"pole at {t}")
        total += c / den
    return total


# -- Q, R and the log-derivative f --------------------------------------------


def q_eval(d: int, t: RationalLike) -> Fraction:
    """Excess-factor function (t+(d-1)/2)**(-d) (t+d/2) prod_{j<d}(t+j)."""
    if d < 3:
        raise ValueError("d must be >= 3")
    t = as_rational(t)
    base = t + Fraction(d - 1, 2)
    if base == 0:
        raise ValueError(f"pole at t = {t}")
    return (t + Fraction(d, 2)) * pochhammer_eval(d - 1, t) / base**d


def q_as_ratfun(d: int) -> RationalFunctionPair:
    if d < 3:
        raise ValueError("d must be >= 3")
    num = expand_linear_factors([Fraction(d, 2)] + list(range(1, d)))
    den = Polynomial.from_coefficients([Fraction(d - 1, 2), 1]) ** d
    return ratfun_reduce(num, den)


def r_eval(d: int, eta: RationalLike) -> Fraction:
    """Excess ratio of the eigenvalue count over its semiclassical bound."""
    from . import phase_space, spectrum

    eta = as_rational(eta)
    params = spectrum.SpectrumParams(d=d, eta=eta)
    if not params.has_negative_spectrum:
        return Fraction(0)
    return Fraction(spectrum.counting_function(params)) / phase_space.clr_rhs(d, eta)


def f_terms(d: int) -> list[tuple[Fraction, Fraction]]:
    if d < 3:
        raise ValueError("d must be >= 3")
    return (
        [(Fraction(1), Fraction(d, 2)), (Fraction(-d), Fraction(d - 1, 2))]
        + [(Fraction(1), Fraction(k)) for k in range(1, d)]
    )


def f_eval(d: int, t: RationalLike) -> Fraction:
    """Logarithmic derivative of Q, evaluated exactly away from its poles."""
    return _eval_terms(f_terms(d), as_rational(t))


def f_denominator(d: int) -> Polynomial:
    """The monic pole polynomial of f: (t + ceil(d/2) - 1/2) prod_{k<d}(t+k)."""
    if d < 3:
        raise ValueError("d must be >= 3")
    half_pole = Fraction(2 * math.ceil(Fraction(d, 2)) - 1, 2)
    return expand_linear_factors([half_pole] + list(range(1, d)))


def f_as_ratfun(d: int) -> RationalFunctionPair:
    """Co-prime form of f; the denominator is (t + ceil(d/2) - 1/2) prod(t+k)."""
    return partial_fraction_sum(f_terms(d))


# -- A, its log-derivative g, and the odd-d squeeze ---------------------------


def a_eval_squared(d: int, t: RationalLike) -> Fraction:
    """A**2 = (t+d/2)**(2-d) (t+d/2-1)**(-d) prod(t+k)**2, exact for any d."""
    if d < 3:
        raise ValueError("d must be >= 3")
    t = as_rational(t)
    b1 = t + Fraction(d, 2)
    b2 = t + Fraction(d, 2) - 1
    if b1 == 0 or b2 == 0:
        raise ValueError(f"pole at t = {t}")
    return pochhammer_eval(d - 1, t) ** 2 * b1 ** (2 - d) * b2 ** (-d)


def a_eval_even(d: int, t: RationalLike) -> Fraction:
    """A itself, exact; only even d keeps the half powers integral."""
    if d % 2 != 0:
        raise ValueError("exact evaluation of A needs even d")
    t = as_rational(t)
    b1 = t + Fraction(d, 2)
    b2 = t + Fraction(d, 2) - 1
    if b1 == 0 or b2 == 0:
        raise ValueError(f"pole at t = {t}")
    return pochhammer_eval(d - 1, t) * b1 ** (1 - d // 2) * b2 ** (-(d // 2))


def a_eval(d: int, t: RationalLike, precision: int = 30) -> HighPrecisionReal:
    """Positive square root of A**2; requires t >= 0 where A is positive."""
    t = as_rational(t)
    if t < 0:
        raise ValueError("a_eval requires t >= 0")
    return sqrt_of_fraction(a_eval_squared(d, t), precision)


def a_squared_as_ratfun(d: int) -> RationalFunctionPair:
    if d < 3:
        raise ValueError("d must be >= 3")
    num = expand_linear_factors(list(range(1, d))) ** 2
    den = (
        Polynomial.from_coefficients([Fraction(d, 2), 1]) ** (d - 2)
        * Polynomial.from_coefficients([Fraction(d, 2) - 1, 1]) ** d
    )
    return ratfun_reduce(num, den)


def g_terms(d: int) -> list[tuple[Fraction, Fraction]]:
    if d < 3:
        raise ValueError("d must be >= 3")
    return (
        [(1 - Fraction(d, 2), Fraction(d, 2)), (-Fraction(d, 2), Fraction(d, 2) - 1)]
        + [(Fraction(1), Fraction(k)) for k in range(1, d)]
    )


def g_eval(d: int, t: RationalLike) -> Fraction:
    """Logarithmic derivative of A, evaluated exactly away from its poles."""
    return _eval_terms(g_terms(d), as_rational(t))


def g_as_ratfun(d: int) -> RationalFunctionPair:
    return partial_fraction_sum(g_terms(d))


def g_shifted_terms(d: int) -> list[tuple[Fraction, Fraction]]:
    """g in the shifted variable s = t + (d-1)/2 (only used for odd d)."""
    if d < 5 or d % 2 == 0:
        raise ValueError("the shifted form is used for odd d >= 5")
    half = Fraction(1, 2)
    return (
        [(1 - Fraction(d, 2), half), (-Fraction(d, 2), -half)]
        + [(Fraction(1), Fraction(j)) for j in range(-(d - 3) // 2, (d - 1) // 2 + 1)]
    )


def g_shifted_eval(d: int, s: RationalLike) -> Fraction:
    return _eval_terms(g_shifted_terms(d), as_rational(s))


def g_shifted_as_ratfun(d: int) -> RationalFunctionPair:
    return partial_fraction_sum(g_shifted_terms(d))


def squeeze_coefficient(d: int) -> Fraction:
    """The lower pole-splitting weight a_d = 1/2 + 1/(2(d-3))."""
    if d < 5 or d % 2 == 0:
        raise ValueError("squeeze coefficient is defined for odd d >= 5")
    return Fraction(1, 2) + Fraction(1, 2 * (d - 3))


def h_a_terms(d: int, a: RationalLike) -> list[tuple[Fraction, Fraction]]:
    if d < 5 or d % 2 == 0:
        raise ValueError("h_a needs odd d >= 5")
    a = as_rational(a)
    if not 0 <= a <= 1:
        raise ValueError("need 0 <= a <= 1")
    half = Fraction(1, 2)
    terms = [
        (1 - Fraction(d, 2), half),
        (-Fraction(d, 2), -half),
        (1 - a, -half),
        (a, half),
    ]
    terms += [
        (Fraction(1), Fraction(k))
        for k in range(-(d - 3) // 2, (d - 1) // 2 + 1)
        if k != 0
    ]
    return terms


def h_a_eval(d: int, a: RationalLike, s: RationalLike) -> Fraction:
    return _eval_terms(h_a_terms(d, a), as_rational(s))


def h_a_as_ratfun(d: int, a: RationalLike) -> RationalFunctionPair:
    """Co-prime form of h_a in the shifted variable s.

    The reduced denominator is (s**2 - 1/4)(s + (d-1)/2) prod(s**2 - k**2).
    """
    return partial_fraction_sum(h_a_terms(d, a))


@dataclass(frozen=True)
class SandwichCertificate:
    """Exact witness for h_{a_d}(s) < g~(s) < h_{1/2}(s) at one sample point."""

    d: int
    s: Fraction
    lower: Fraction
    middle: Fraction
    upper: Fraction

    @property
    def holds(self) -> bool:
        return self.lower < self.middle < self.upper


def g_shifted_sandwich_check(d: int, s: RationalLike) -> SandwichCertificate:
    """Certify the strict squeeze at a rational point s > (d-3)/2."""
    s = as_rational(s)
    if d < 5 or d % 2 == 0:
        raise ValueError("the squeeze applies to odd d >= 5")
    if s <= Fraction(d - 3, 2):
        raise ValueError("precondition violated: need s > (d-3)/2")
    return SandwichCertificate(
        d=d,
        s=s,
        lower=h_a_eval(d, squeeze_coefficient(d), s),
        middle=g_shifted_eval(d, s),
        upper=h_a_eval(d, Fraction(1, 2), s),
    )


# -- the summation bound G ----------------------------------------------------


def big_g_squared(d: int, t: RationalLike) -> Fraction:
    """G**2 as an exact rational, valid for d >= 4 and t >= 0."""
    if d < 4:
        raise ValueError("G is defined for d >= 4")
    t = as_rational(t)
    if t < 0:
        raise ValueError("G is studied for t >= 0")
    bracket = 1 + Fraction(d - 3) / (d - 1 + 2 * t) + Fraction(1) / (2 * (d - 2 + t))
    outer = (Fraction(d, 2) + t) * (d + t - 1)
    return pochhammer_eval(d - 2, t) ** 2 * bracket**d * outer ** (2 - d)


def big_g_eval(d: int, t: RationalLike, precision: int = 30) -> Fraction | HighPrecisionReal:
    """G itself: exact rational for even d, validated real for odd d."""
    t = as_rational(t)
    if d % 2 == 0:
        if d < 4:
            raise ValueError("G is defined for d >= 4")
        if t < 0:
            raise ValueError("G is studied for t >= 0")
        bracket = 1 + Fraction(d - 3) / (d - 1 + 2 * t) + Fraction(1) / (2 * (d - 2 + t))
        outer = (Fraction(d, 2) + t) * (d + t - 1)
        return pochhammer_eval(d - 2, t) * bracket ** (d // 2) * outer ** (1 - d // 2)
    return sqrt_of_fraction(big_g_squared(d, t), precision)


def big_g_monotonicity_quadratic(d: int) -> Polynomial:
    """Quadratic whose nonnegative coefficients certify that G increases.

    (1/4)(d-2)(d-4) t**2 + (1/16)(5d-16)(d-1)(d-2) t + (1/32)d(d-1)(d-2)(d-3).
    """
    if d < 4:
        raise ValueError("d must be >= 4")
    return Polynomial.from_coefficients(
        [
            Fraction(d * (d - 1) * (d - 2) * (d - 3), 32),
            Fraction((5 * d - 16) * (d - 1) * (d - 2), 16),
            Fraction((d - 2) * (d - 4), 4),
        ]
    )


# -- symbolic identity checks -------------------------------------------------


def logderiv_check(kind: str, d: int) -> bool:
    """Verify Q'/Q = f (kind 'Q') or (A**2)'/A**2 = 2g (kind 'A_squared') symbolically."""
    if kind == "Q":
        return log_derivative(q_as_ratfun(d)) == f_as_ratfun(d)
    if kind == "A_squared":
        return log_derivative(a_squared_as_ratfun(d)) == g_as_ratfun(d).scale(2)
    raise ValueError(f"unknown kind {kind!r}")


def q_right_limit_value(d: int, tau0: int) -> Fraction:
    """Closed form (d+2*tau0) prod(tau0+j) / (2**(1-d) (2*tau0+d-1)**d).

    Equals Q at the integer tau0: the right limit of the excess ratio along
    eta = 2*tau + d - 1.
    """
    if d < 3 or tau0 < 0:
        raise ValueError("need d >= 3 and tau0 >= 0")
    prod = math.prod(tau0 + j for j in range(1, d))
    return Fraction((d + 2 * tau0) * prod) / (Fraction(2 ** (1 - d)) * (2 * tau0 + d - 1) ** d)
