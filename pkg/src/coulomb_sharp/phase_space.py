"""Semiclassical phase-space quantities: the right-hand sides of the inequalities.

The combined semiclassical bound for the shifted Coulomb potential is

    eta**d / 2**(d-1) * Gamma(gamma+1) Gamma(d/2-gamma) / (Gamma(d+1) Gamma(d/2)),

in units Lambda = 1 (finite exactly for 0 <= gamma < d/2).  Gamma values at
integer and half-integer arguments are assembled symbolically as exact
rationals times a power of sqrt(pi), so that pi powers cancel structurally
before anything is evaluated numerically; only genuinely irrational queries
fall back to validated high-precision evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .exact import RationalLike, as_rational
from .highprec import HighPrecisionReal, fraction_to_mpf, validated_eval


@dataclass(frozen=True)
class PiScaledRational:
    """Exact value ratio * pi**(pi_half_power/2)."""

    ratio: Fraction
    pi_half_power: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ratio", as_rational(self.ratio))
        if self.ratio == 0:
            object.__setattr__(self, "pi_half_power", 0)

    @property
    def is_rational(self) -> bool:
        return self.pi_half_power == 0

    def __mul__(self, other: Union["PiScaledRational", RationalLike]) -> "PiScaledRational":
        if isinstance(other, PiScaledRational):
            return PiScaledRational(self.ratio * other.ratio, self.pi_half_power + other.pi_half_power)
        return PiScaledRational(self.ratio * as_rational(other), self.pi_half_power)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["PiScaledRational", RationalLike]) -> "PiScaledRational":
        if isinstance(other, PiScaledRational):
            if other.ratio == 0:
                raise ZeroDivisionError
            return PiScaledRational(self.ratio / other.ratio, self.pi_half_power - other.pi_half_power)
        return PiScaledRational(self.ratio / as_rational(other), self.pi_half_power)

    def _comparable(self, other: "PiScaledRational") -> None:
        if self.pi_half_power != other.pi_half_power and self.ratio != 0 and other.ratio != 0:
            raise TypeError(
                "mixed pi powers compare only through high-precision evaluation; use to_real()"
            )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PiScaledRational):
            return self.ratio == other.ratio and self.pi_half_power == other.pi_half_power
        if isinstance(other, (Fraction, int)):
            return self.is_rational and self.ratio == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.ratio)
        return hash((self.ratio, self.pi_half_power))

    def __lt__(self, other: "PiScaledRational") -> bool:
        self._comparable(other)
        return self.ratio < other.ratio

    def __le__(self, other: "PiScaledRational") -> bool:
        self._comparable(other)
        return self.ratio <= other.ratio

    def to_real(self, precision: int = 30) -> HighPrecisionReal:
        return validated_eval(
            lambda: fraction_to_mpf(self.ratio)
            * mpmath.power(mpmath.pi, mpmath.mpf(self.pi_half_power) / 2),
            precision,
        )

    def __repr__(self) -> str:
        if self.is_rational:
            return f"{self.ratio}"
        return f"{self.ratio}*pi^({self.pi_half_power}/2)"


def gamma_at(x: RationalLike, precision: int = 30) -> PiScaledRational | HighPrecisionReal:
    """Gamma(x) for x > 0: exact when 2x is an integer, validated real otherwise.

    Gamma(n) = (n-1)! and Gamma(n + 1/2) = (2n)! sqrt(pi) / (4**n n!).
    """
    x = as_rational(x)
    if x <= 0:
        raise ValueError("gamma_at requires x > 0 (poles are never needed here)")
    if x.denominator == 1:
        return PiScaledRational(Fraction(math.factorial(x.numerator - 1)), 0)
    if x.denominator == 2:
        n = (x.numerator - 1) // 2
        ratio = Fraction(math.factorial(2 * n), 4**n * math.factorial(n))
        return PiScaledRational(ratio, 1)
    return validated_eval(lambda: mpmath.gamma(fraction_to_mpf(x)), precision)


def lt_rhs(
    d: int, eta: RationalLike, gamma: RationalLike, precision: int = 30
) -> Fraction | PiScaledRational | HighPrecisionReal:
    """Semiclassical right-hand side of the order-gamma inequality, units Lambda**gamma.

    Exact whenever 2*gamma is an integer (a plain rational when the pi powers
    cancel, which happens for every odd d with 2*gamma integer and every even
    d with gamma integer); validated high-precision real otherwise.
    """
    eta, gamma = as_rational(eta), as_rational(gamma)
    if d < 3:
        raise ValueError("d must be >= 3")
    if gamma < 0:
        raise ValueError("gamma must be >= 0")
    if gamma >= Fraction(d, 2):
        raise ValueError("phase-space integral diverges for gamma >= d/2")
    if (2 * gamma).denominator == 1:
        prefactor = PiScaledRational(eta**d / 2 ** (d - 1), 0)
        value = (
            prefactor
            * gamma_at(gamma + 1)
            * gamma_at(Fraction(d, 2) - gamma)
            / (gamma_at(Fraction(d + 1)) * gamma_at(Fraction(d, 2)))
        )
        if value.is_rational:
            return value.ratio
        return value

    def compute() -> mpmath.mpf:
        g = fraction_to_mpf(gamma)
        dh = mpmath.mpf(d) / 2
        return (
            fraction_to_mpf(eta**d / 2 ** (d - 1))
            * mpmath.gamma(g + 1)
            * mpmath.gamma(dh - g)
            / (mpmath.gamma(d + 1) * mpmath.gamma(dh))
        )

    return validated_eval(compute, precision)


def clr_rhs(d: int, eta: RationalLike) -> Fraction:
    """Semiclassical bound on the eigenvalue count: eta**d / (2**(d-1) d!)."""
    eta = as_rational(eta)
    if d < 3:
        raise ValueError("d must be >= 3")
    if eta <= 0:
        raise ValueError("eta must be positive")
    return eta**d / (2 ** (d - 1) * math.factorial(d))


def semiclassical_constant(gamma: RationalLike, d: int, precision: int = 30) -> HighPrecisionReal:
    """The bare phase-space prefactor Gamma(gamma+1)/((4 pi)**(d/2) Gamma(gamma+1+d/2)).

    Exposed only at high precision: its pi**(-d/2) never cancels on its own;
    all exact inequality checks go through lt_rhs where cancellation is
    structural.
    """
    gamma = as_rational(gamma)
    if gamma < 0:
        raise ValueError("gamma must be >= 0")

    def compute() -> mpmath.mpf:
        g = fraction_to_mpf(gamma)
        return mpmath.gamma(g + 1) / (
            mpmath.power(4 * mpmath.pi, mpmath.mpf(d) / 2) * mpmath.gamma(g + 1 + mpmath.mpf(d) / 2)
        )

    return validated_eval(compute, precision)
