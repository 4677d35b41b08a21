"""Sharp constants and certified maximizer localization.

The optimal excess factors are maxima of Q (shifted Coulomb) and A
(conjectured general bound) over small integer windows around d**2/6.  The
windows come from localizing the unique positive zero of the respective
logarithmic derivative; that zero is certified here by exact Sturm counts
and narrowed by rational bisection.  All value comparisons are exact; odd-d
irrationality of A is handled by comparing squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import excess
from .exact import (
    CertificationError,
    EndpointRootError,
    Polynomial,
    RationalLike,
    RootBracket,
    as_rational,
    bisect_root,
    cauchy_root_bound,
    isolate_unique_root,
    sturm_count,
)

DEFAULT_BRACKET_WIDTH = Fraction(1, 1000)


@dataclass(frozen=True)
class StarResult:
    """Exact integer-window maximum of an excess-factor function."""

    d: int
    argmax_ell: int
    value_squared: Fraction
    value: Fraction | None
    candidate_window: tuple[int, int]
    maximizer_bracket: RootBracket | None
    tie_ell: int | None = None


def q_candidate_window(d: int) -> tuple[int, int]:
    """Integer window [floor(d^2/6-3d/2+7/3), ceil(d^2/6-d/2-2/3)], clamped at 0."""
    if d < 4:
        return (0, 0)
    lo = math.floor(Fraction(d * d, 6) - Fraction(3 * d, 2) + Fraction(7, 3))
    hi = math.ceil(Fraction(d * d, 6) - Fraction(d, 2) - Fraction(2, 3))
    return (max(0, lo), max(0, hi))


def a_candidate_window(d: int) -> tuple[int, int]:
    """Integer window [floor(d^2/6-3d/2+5/3), ceil(d^2/6-d/2-1)], clamped at 0."""
    if d < 5:
        return (0, 0)
    lo = math.floor(Fraction(d * d, 6) - Fraction(3 * d, 2) + Fraction(5, 3))
    hi = math.ceil(Fraction(d * d, 6) - Fraction(d, 2) - 1)
    return (max(0, lo), max(0, hi))


def q_value(d: int, ell: int) -> Fraction:
    """Q at an integer level, through pure big-integer arithmetic."""
    prod = math.prod(ell + j for j in range(1, d))
    return Fraction(2 ** (d - 1) * (2 * ell + d) * prod, (2 * ell + d - 1) ** d)


def a_value_squared(d: int, ell: int) -> Fraction:
    """A**2 at an integer level, through pure big-integer arithmetic."""
    prod = math.prod(ell + j for j in range(1, d))
    return Fraction(
        2 ** (2 * d - 2) * prod * prod,
        (2 * ell + d) ** (d - 2) * (2 * ell + d - 2) ** d,
    )


def _window_argmax(values: dict[int, Fraction]) -> tuple[int, Fraction, int | None]:
    best_ell = min(values)
    best = values[best_ell]
    tie: int | None = None
    for ell in sorted(values):
        if ell == best_ell:
            continue
        v = values[ell]
        if v > best:
            best_ell, best, tie = ell, v, None
        elif v == best:
            # Ties break toward the smaller level and are reported.
            tie = ell if tie is None else min(tie, ell)
    return best_ell, best, tie


def q_star(d: int, locate_maximizer: bool = False, width: RationalLike = DEFAULT_BRACKET_WIDTH) -> StarResult:
    """Exact maximum of Q over its candidate window (Q3 maximizes at 0)."""
    if d < 3:
        raise ValueError("d must be >= 3")
    lo, hi = q_candidate_window(d)
    values = {ell: q_value(d, ell) for ell in range(lo, hi + 1)}
    argmax, best, tie = _window_argmax(values)
    bracket = None
    if locate_maximizer and d >= 4:
        bracket = locate_t_star(d, width)
    return StarResult(
        d=d,
        argmax_ell=argmax,
        value_squared=best * best,
        value=best,
        candidate_window=(lo, hi),
        maximizer_bracket=bracket,
        tie_ell=tie,
    )


def a_star(d: int, locate_maximizer: bool = False, width: RationalLike = DEFAULT_BRACKET_WIDTH) -> StarResult:
    """Exact maximum of A over its candidate window, compared through squares."""
    if d < 3:
        raise ValueError("d must be >= 3")
    lo, hi = a_candidate_window(d)
    values = {ell: a_value_squared(d, ell) for ell in range(lo, hi + 1)}
    argmax, best_sq, tie = _window_argmax(values)
    value = excess.a_eval_even(d, Fraction(argmax)) if d % 2 == 0 else None
    bracket = None
    if locate_maximizer and d >= 5:
        bracket = locate_a_maximizer(d, width)
    return StarResult(
        d=d,
        argmax_ell=argmax,
        value_squared=best_sq,
        value=value,
        candidate_window=(lo, hi),
        maximizer_bracket=bracket,
        tie_ell=tie,
    )


def _certified_unique_root_bracket(
    poly: Polynomial,
    domain_lo: Fraction,
    window: tuple[Fraction, Fraction],
    width: Fraction,
) -> RootBracket:
    """Sturm-certify a unique root of poly in (domain_lo, +inf), inside window.

    The right end of the half-line is closed off by a Cauchy root bound, so
    the two Sturm counts genuinely cover (domain_lo, +inf).
    """
    win_lo, win_hi = window
    bound = cauchy_root_bound(poly)
    domain_hi = max(bound, win_hi + 1)
    try:
        total = sturm_count(poly, domain_lo, domain_hi)
        inside = sturm_count(poly, win_lo, win_hi)
    except EndpointRootError as exc:
        raise CertificationError(f"maximizer sits on a window endpoint: {exc}") from exc
    if total != 1:
        raise CertificationError(f"expected one zero beyond {domain_lo}, Sturm count is {total}")
    if inside != 1:
        raise CertificationError(
            f"unique zero not strictly inside ({win_lo}, {win_hi}); count there is {inside}"
        )
    bracket = isolate_unique_root(poly, win_lo, win_hi)
    bracket = bisect_root(poly.eval, bracket, width)
    # Tighten until strictly inside the open window.
    while bracket.lower <= win_lo or bracket.upper >= win_hi:
        bracket = bisect_root(poly.eval, bracket, bracket.width / 4)
    return bracket


def t_star_bounds(d: int) -> tuple[Fraction, Fraction]:
    """Open interval (d^2/6 - 3d/2 + 7/3, d^2/6 - d/2 - 2/3) containing t*."""
    return (
        Fraction(d * d, 6) - Fraction(3 * d, 2) + Fraction(7, 3),
        Fraction(d * d, 6) - Fraction(d, 2) - Fraction(2, 3),
    )


def locate_t_star(d: int, width: RationalLike = DEFAULT_BRACKET_WIDTH) -> RootBracket:
    """Certified bracket for the unique zero of f beyond -1 (d >= 4)."""
    if d == 3:
        raise ValueError("Q_3 is strictly decreasing on (-1, +inf); no interior maximizer")
    if d < 3:
        raise ValueError("d must be >= 3")
    poly = excess.f_as_ratfun(d).numerator
    return _certified_unique_root_bracket(poly, Fraction(-1), t_star_bounds(d), as_rational(width))


def locate_a_maximizer(d: int, width: RationalLike = DEFAULT_BRACKET_WIDTH) -> RootBracket | None:
    """Certified bracket for the unique zero of g beyond -1; None for d <= 4.

    For even d the zero is isolated on the numerator of g directly; for odd d
    on the numerator of the shifted form (poles at s <= (d-3)/2), and the
    bracket is shifted back to the t variable.
    """
    if d < 3:
        raise ValueError("d must be >= 3")
    if d <= 4:
        return None
    width = as_rational(width)
    if d % 2 == 0:
        poly = excess.g_as_ratfun(d).numerator
        lo = Fraction(-1)
    else:
        poly = excess.g_shifted_as_ratfun(d).numerator
        lo = Fraction(d - 3, 2)
    hi = max(cauchy_root_bound(poly), lo + 1)
    count = sturm_count(poly, lo, hi)
    if count != 1:
        raise CertificationError(f"expected one zero of g beyond {lo}, count is {count}")
    bracket = bisect_root(poly.eval, isolate_unique_root(poly, lo, hi), width)
    if d % 2 == 0:
        return bracket
    shift = Fraction(d - 1, 2)
    return RootBracket(
        bracket.lower - shift,
        bracket.upper - shift,
        bracket.sign_at_lower,
        bracket.sign_at_upper,
    )


def counterexample_scan(
    d: int, eta_grid: list[Fraction]
) -> list[tuple[Fraction, Fraction]]:
    """Grid points where the eigenvalue count beats the semiclassical bound."""
    grid = [as_rational(eta) for eta in eta_grid]
    for eta in grid:
        if eta <= d - 1:
            raise ValueError(f"eta = {eta} is outside the negative-spectrum regime")
    hits = []
    for eta in sorted(grid):
        ratio = excess.r_eval(d, eta)
        if ratio > 1:
            hits.append((eta, ratio))
    return hits


def a_zero_window_check(d: int, interior_samples: int = 16) -> bool:
    """Exact sign confirmation that g's positive zero sits in the stated window.

    Checks g > 0 on (-1, d^2/6 - 3d/2 + 5/3] and g < 0 on
    [d^2/6 - d/2 - 1, +inf-ish), at the endpoints and at interior samples.
    The lower region is empty for d = 5 and the check there is vacuous.
    """
    if d < 5 or d % 2 == 0:
        raise ValueError("this window check is for odd d >= 5")
    t_hi = Fraction(d * d, 6) - Fraction(d, 2) - 1
    t_lo = Fraction(d * d, 6) - Fraction(3 * d, 2) + Fraction(5, 3)
    ok = True
    samples_hi = [t_hi] + [t_hi + Fraction(j * d, 8) for j in range(1, interior_samples + 1)]
    for t in samples_hi:
        ok = ok and excess.g_eval(d, t) < 0
    if t_lo > -1:
        step = (t_lo + 1) / (interior_samples + 1)
        samples_lo = [Fraction(-1) + j * step for j in range(1, interior_samples + 1)] + [t_lo]
        for t in samples_lo:
            ok = ok and excess.g_eval(d, t) > 0
    return ok
