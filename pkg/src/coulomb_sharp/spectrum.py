"""Negative spectrum of the shifted Coulomb Hamiltonian -Delta - kappa/|x| + Lambda.

The whole negative spectrum is controlled by the single dimensionless
coupling ratio eta = kappa/sqrt(Lambda); every quantity here is reported in
units Lambda = 1.  The eigenvalues are the hydrogen-like levels

    lambda_j / Lambda = 1 - eta**2 / (2j + d - 1)**2,   j = 0, ..., ell,

with ell = ceil((eta + 1 - d)/2) - 1; the spectrum is empty when
eta <= d - 1.  Multiplicities, the counting function and Riesz means are all
exact integers or rationals; ell is computed by exact rational ceiling so the
discontinuities in eta are bit-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exact import RationalLike, as_rational
from .highprec import HighPrecisionReal, fraction_to_mpf, validated_eval


@dataclass(frozen=True)
class SpectrumParams:
    """A problem instance: dimension d >= 3 and coupling ratio eta > 0."""

    d: int
    eta: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 3:
            raise ValueError("dimension d must be an integer >= 3")
        object.__setattr__(self, "eta", as_rational(self.eta))
        if self.eta <= 0:
            raise ValueError("eta must be positive")

    @property
    def tau(self) -> Fraction:
        return (self.eta + 1 - self.d) / 2

    @property
    def ell(self) -> int | None:
        """Index of the highest negative level, or None for empty spectrum."""
        if self.eta <= self.d - 1:
            return None
        return math.ceil(self.tau) - 1

    @property
    def has_negative_spectrum(self) -> bool:
        return self.ell is not None


@dataclass(frozen=True)
class LevelData:
    j: int
    multiplicity: int
    lambda_over_Lambda: Fraction


@dataclass(frozen=True)
class RieszQuery:
    """Riesz-mean request; precision only matters for gamma outside {0, 1}."""

    params: SpectrumParams
    gamma: Fraction
    precision: int = 30

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        if self.gamma < 0:
            raise ValueError("gamma must be >= 0")


def multiplicity(d: int, j: int) -> int:
    """Multiplicity of the j-th Coulomb level: (d-2+j)! (d-1+2j) / ((d-1)! j!)."""
    if d < 3 or j < 0:
        raise ValueError("need d >= 3 and j >= 0")
    num = math.factorial(d - 2 + j) * (d - 1 + 2 * j)
    den = math.factorial(d - 1) * math.factorial(j)
    q, r = divmod(num, den)
    assert r == 0
    return q


def levels(params: SpectrumParams) -> list[LevelData]:
    """All negative levels with multiplicities, in increasing energy order."""
    ell = params.ell
    if ell is None:
        return []
    out = []
    for j in range(ell + 1):
        lam = 1 - Fraction(params.eta**2, (2 * j + params.d - 1) ** 2)
        out.append(LevelData(j=j, multiplicity=multiplicity(params.d, j), lambda_over_Lambda=lam))
    return out


def counting_function(params: SpectrumParams) -> int:
    """Total multiplicity of the negative spectrum: (d+2l)(d+l-1)!/(d! l!)."""
    ell = params.ell
    if ell is None:
        return 0
    d = params.d
    num = (d + 2 * ell) * math.factorial(d + ell - 1)
    den = math.factorial(d) * math.factorial(ell)
    q, r = divmod(num, den)
    assert r == 0
    return q


def riesz_mean(query: RieszQuery) -> Fraction | HighPrecisionReal:
    """Sum of |lambda_j/Lambda|**gamma with multiplicities (gamma = 0: the count).

    Exact rational for gamma in {0, 1}; a validated high-precision real
    otherwise.  Returns 0 for empty spectrum.
    """
    params, gamma = query.params, query.gamma
    ell = params.ell
    if ell is None:
        return Fraction(0)
    if gamma == 0:
        return Fraction(counting_function(params))
    d, eta = params.d, params.eta
    terms = [
        (multiplicity(d, j), Fraction(eta**2, (2 * j + d - 1) ** 2) - 1) for j in range(ell + 1)
    ]
    if gamma == 1:
        return sum((mu * x for mu, x in terms), Fraction(0))

    def compute() -> mpmath.mpf:
        total = mpmath.mpf(0)
        g = fraction_to_mpf(gamma)
        for mu, x in terms:
            total += mu * mpmath.power(fraction_to_mpf(x), g)
        return total

    return validated_eval(compute, query.precision)


def riesz_mean_d3_closed_form(eta: RationalLike) -> Fraction:
    """Order-1 Riesz mean for d = 3: (l+1)eta^2/4 - (l+1)(l+2)(2l+3)/6."""
    eta = as_rational(eta)
    if eta <= 0:
        raise ValueError("eta must be positive")
    if eta <= 2:
        return Fraction(0)
    ell = math.ceil((eta - 2) / 2) - 1
    return Fraction(ell + 1) * eta**2 / 4 - Fraction((ell + 1) * (ell + 2) * (2 * ell + 3), 6)
