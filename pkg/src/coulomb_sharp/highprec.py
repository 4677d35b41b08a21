"""Self-validating high-precision real evaluation.

Only a handful of quantities in this project are genuinely irrational
(half-integer powers for odd dimension, gamma values at generic arguments,
Riesz means of non-integer order).  They are evaluated with mpmath under a
simple contract: compute at ``precision + 10`` guard digits and again with
ten more, accept when the two runs agree through the guarded length,
otherwise double the working precision and retry.  The accepted value is
therefore correct to well within one unit in the requested last digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath
from mpmath import mp

GUARD_DIGITS = 10
MAX_DOUBLINGS = 6


class PrecisionError(ArithmeticError):
    """Two evaluations kept disagreeing after repeated precision doubling."""


@dataclass(frozen=True)
class HighPrecisionReal:
    """A real number carrying its requested significant-digit precision."""

    value: mpmath.mpf
    precision: int

    def __float__(self) -> float:
        return float(self.value)

    def to_decimal(self, digits: int | None = None) -> str:
        return mpmath.nstr(
            self.value, digits or self.precision, strip_zeros=False, min_fixed=-4, max_fixed=15
        )

    def __repr__(self) -> str:
        return f"HighPrecisionReal({self.to_decimal()}, precision={self.precision})"


def fraction_to_mpf(x: Fraction) -> mpmath.mpf:
    """Convert under the ambient working precision (one correctly-rounded division)."""
    return mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)


def validated_eval(compute: Callable[[], mpmath.mpf], precision: int) -> HighPrecisionReal:
    """Run compute() twice with guard digits; double the precision until they agree."""
    if precision < 1:
        raise ValueError("precision must be at least 1 significant digit")
    work = precision
    for _ in range(MAX_DOUBLINGS + 1):
        with mp.workdps(work + GUARD_DIGITS):
            first = compute()
        with mp.workdps(work + 2 * GUARD_DIGITS):
            second = compute()
            if second == 0:
                agreed = first == 0
            else:
                agreed = abs(first - second) <= abs(second) * mpmath.mpf(10) ** (
                    -(work + GUARD_DIGITS - 1)
                )
            if agreed:
                return HighPrecisionReal(+second, precision)
        work *= 2
    raise PrecisionError(f"no agreement after {MAX_DOUBLINGS} precision doublings")


def real_from_fraction(x: Fraction, precision: int) -> HighPrecisionReal:
    return validated_eval(lambda: fraction_to_mpf(x), precision)


def sqrt_of_fraction(x: Fraction, precision: int) -> HighPrecisionReal:
    if x < 0:
        raise ValueError("square root of a negative rational")
    return validated_eval(lambda: mpmath.sqrt(fraction_to_mpf(x)), precision)


def power_of_fraction(base: Fraction, exponent: Fraction, precision: int) -> HighPrecisionReal:
    """base**exponent for positive rational base, via exp(exponent*log(base))."""
    if base <= 0:
        raise ValueError("power of a non-positive rational base")
    return validated_eval(
        lambda: mpmath.power(fraction_to_mpf(base), fraction_to_mpf(exponent)), precision
    )
