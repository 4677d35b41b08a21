"""Machine checks for every inequality and identity of the analysis.

Each check produces a CheckRecord carrying its exact inputs and both-side
witnesses.  Checks over rationals are replayable bit for bit; strict
inequalities on the high-precision path demand a margin of ten units in the
last kept digit and otherwise re-run at doubled precision before giving up
as 'inconclusive' (which the CLI treats as failure).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mp

from . import excess, optima, phase_space, spectrum
from .exact import Polynomial, RationalLike, as_rational
from .highprec import HighPrecisionReal
from .phase_space import PiScaledRational

# Residual bound for the d**-3 tail of the expansions of the sharp constants:
# twice the largest |d^3 * residual| observed on the calibration range
# d in [50, 400] (19.3788 for the Q sequence, 5.2624 for the A sequence,
# both peaking at d = 50).
ASYMPTOTIC_RESIDUAL_BOUND = Fraction("38.7576")

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"


def _fmt(value) -> str:
    if isinstance(value, HighPrecisionReal):
        return value.to_decimal()
    if isinstance(value, PiScaledRational):
        return repr(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    params: dict[str, str]
    verdict: str
    witness: dict[str, str]
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict in (PASS, SKIPPED)

    def to_json(self) -> str:
        payload = {
            "check_id": self.check_id,
            "params": dict(sorted(self.params.items())),
            "verdict": self.verdict,
            "witness": dict(sorted(self.witness.items())),
            "note": self.note,
        }
        return json.dumps(payload, separators=(",", ":"))


def _record(check_id: str, params: dict, ok: bool, witness: dict, note: str = "") -> CheckRecord:
    return CheckRecord(
        check_id=check_id,
        params={k: _fmt(v) for k, v in params.items()},
        verdict=PASS if ok else FAIL,
        witness={k: _fmt(v) for k, v in witness.items()},
        note=note,
    )


# -- order-1 inequality checks -------------------------------------------------


def check_lt_gamma1(d: int, eta: RationalLike) -> CheckRecord:
    """Improved order-1 bound: trace <= (semiclassical - eta**2/(4(d-1)(d-2)**2))_+."""
    eta = as_rational(eta)
    params = {"d": d, "eta": eta}
    if d == 3:
        return CheckRecord(
            check_id="lt-gamma1",
            params={k: _fmt(v) for k, v in params.items()},
            verdict=SKIPPED,
            witness={},
            note="the improved order-1 bound does not hold for d = 3",
        )
    if d < 3:
        raise ValueError("d must be >= 3")
    lhs = spectrum.riesz_mean(
        spectrum.RieszQuery(spectrum.SpectrumParams(d=d, eta=eta), gamma=Fraction(1))
    )
    correction = Fraction(eta**2, 4 * (d - 1) * (d - 2) ** 2)
    rhs = max(Fraction(0), phase_space.lt_rhs(d, eta, Fraction(1)) - correction)
    return _record("lt-gamma1", params, lhs <= rhs, {"lhs": lhs, "rhs": rhs})


def check_d3_envelopes(eta: RationalLike) -> CheckRecord:
    """d=3 envelopes with leading term, second-order correction and oscillation.

    Also asserts the sharpness pattern: equality on the upper side at odd
    integer eta > 2 and on the lower side at even integer eta.
    """
    eta = as_rational(eta)
    if eta <= 0:
        raise ValueError("eta must be positive")
    trace = spectrum.riesz_mean_d3_closed_form(eta)
    half_count = 2 * math.ceil(eta / 2) - 1
    core = eta**3 / 12 - eta**2 / 8
    upper = max(Fraction(0), core + Fraction(half_count, 24))
    lower = max(Fraction(0), core - eta / 12)
    ok = lower <= trace <= upper
    note = ""
    if eta.denominator == 1:
        if eta.numerator % 2 == 1 and eta > 2:
            ok = ok and trace == upper
            note = "upper equality at odd integer eta"
        elif eta.numerator % 2 == 0:
            ok = ok and trace == lower
            note = "lower equality at even integer eta"
    return _record(
        "d3-envelope",
        {"eta": eta},
        ok,
        {"lower": lower, "trace": trace, "upper": upper},
        note,
    )


def check_phi_envelope(m: int, eps: RationalLike) -> CheckRecord:
    """Oscillating third term stays within [-eta/12, (2m+1)/24] for eta = 2m+2eps."""
    eps = as_rational(eps)
    if m < 1 or not 0 < eps <= 1:
        raise ValueError("need m >= 1 and eps in (0, 1]")
    eta = 2 * m + 2 * eps
    phi = -Fraction(2, 3) * eps**3 + Fraction(1 - 2 * m, 2) * eps**2 + m * eps - Fraction(m, 6)
    lower, upper = -eta / 12, Fraction(2 * m + 1, 24)
    ok = lower <= phi <= upper
    return _record(
        "phi-envelope",
        {"m": m, "eps": eps},
        ok,
        {"lower": lower, "phi": phi, "upper": upper},
    )


def check_abel_bound(d: int, ell: int) -> CheckRecord:
    """Summation-by-parts bound on (d-1)!(d-2) sum mu_j/(2j+d-1)**2."""
    if d < 4 or ell < 0:
        raise ValueError("need d >= 4 and ell >= 0")
    lhs = math.factorial(d - 1) * (d - 2) * sum(
        Fraction(spectrum.multiplicity(d, j), (2 * j + d - 1) ** 2) for j in range(ell + 1)
    )
    alpha = (
        Fraction(1, 2)
        + Fraction(d - 3, 2 * (d - 1 + 2 * ell))
        + Fraction(1, 4 * (d - 2 + ell))
    )
    rhs = alpha * excess.pochhammer_eval(d - 2, ell) - Fraction(math.factorial(d - 3), 4)
    return _record("abel-bound", {"d": d, "ell": ell}, lhs <= rhs, {"lhs": lhs, "rhs": rhs})


def check_big_g_bound(d: int, ell_max: int) -> CheckRecord:
    """G(ell)**2 <= 1 and strictly increasing on 0..ell_max, exactly."""
    if d < 4 or ell_max < 0:
        raise ValueError("need d >= 4 and ell_max >= 0")
    previous = None
    bounded = increasing = True
    for ell in range(ell_max + 1):
        value = excess.big_g_squared(d, ell)
        bounded = bounded and value <= 1
        if previous is not None:
            increasing = increasing and previous < value
        previous = value
    ok = bounded and increasing
    witness = {
        "g_squared_at_0": excess.big_g_squared(d, 0),
        "g_squared_at_max": float(excess.big_g_squared(d, ell_max)),
        "bounded": bounded,
        "strictly_increasing": increasing,
    }
    return _record("big-g-bound", {"d": d, "ell_max": ell_max}, ok, witness)


def check_appendix_sums(d: int) -> CheckRecord:
    """Direct summation of sum(2j-d+1) and sum(2j-d+1)**2 against closed forms."""
    if d < 3:
        raise ValueError("d must be >= 3")
    s1 = sum(2 * j - d + 1 for j in range(1, d))
    s2 = sum((2 * j - d + 1) ** 2 for j in range(1, d))
    s1_closed = d - 1
    s2_closed = Fraction(4, 3) * d * (d * d - 1) - (d - 1) * (d * d + 2 * d - 1)
    ok = s1 == s1_closed and s2 == s2_closed
    return _record(
        "appendix-sums",
        {"d": d},
        ok,
        {"sum1": s1, "sum1_closed": s1_closed, "sum2": s2, "sum2_closed": s2_closed},
    )


# -- high-precision strict comparisons ----------------------------------------


def _strict_less_high_precision(
    lhs_at: Callable[[int], mpmath.mpf],
    rhs_at: Callable[[int], mpmath.mpf],
    precision: int,
) -> tuple[str, mpmath.mpf, mpmath.mpf, int]:
    """Decide lhs < rhs with a margin of 10 units in the last kept digit.

    Re-runs at doubled precision up to 3 times; 'inconclusive' after that.
    """
    work = precision
    for _ in range(4):
        with mp.workdps(work + 10):
            lhs = lhs_at(work)
            rhs = rhs_at(work)
            scale = max(abs(lhs), abs(rhs), mpmath.mpf(1))
            margin = 10 * scale * mpmath.mpf(10) ** (1 - work)
            if rhs - lhs > margin:
                return PASS, lhs, rhs, work
            if lhs - rhs > margin:
                return FAIL, lhs, rhs, work
        work *= 2
    return INCONCLUSIVE, lhs, rhs, work // 2


def check_lt_general_gamma(
    d: int, eta: RationalLike, gamma: RationalLike, precision: int = 30
) -> CheckRecord:
    """Strict order-gamma inequality for gamma in [1, d/2)."""
    eta, gamma = as_rational(eta), as_rational(gamma)
    if gamma >= Fraction(d, 2):
        raise ValueError("phase-space integral diverges for gamma >= d/2")
    if gamma < 1:
        raise ValueError("the strict inequality needs gamma >= 1")
    params = {"d": d, "eta": eta, "gamma": gamma, "precision": precision}
    if gamma == 1:
        lhs = spectrum.riesz_mean(
            spectrum.RieszQuery(spectrum.SpectrumParams(d=d, eta=eta), gamma=Fraction(1))
        )
        rhs = phase_space.lt_rhs(d, eta, Fraction(1))
        return _record("lt-general-gamma", params, lhs < rhs, {"lhs": lhs, "rhs": rhs})

    rhs_exact = phase_space.lt_rhs(d, eta, gamma, precision)

    def lhs_at(p: int) -> mpmath.mpf:
        value = spectrum.riesz_mean(
            spectrum.RieszQuery(spectrum.SpectrumParams(d=d, eta=eta), gamma=gamma, precision=p)
        )
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return value.value

    def rhs_at(p: int) -> mpmath.mpf:
        if isinstance(rhs_exact, Fraction):
            return mpmath.mpf(rhs_exact.numerator) / rhs_exact.denominator
        if isinstance(rhs_exact, PiScaledRational):
            return rhs_exact.to_real(p).value
        return phase_space.lt_rhs(d, eta, gamma, p).value

    verdict, lhs, rhs, used = _strict_less_high_precision(lhs_at, rhs_at, precision)
    exact_note = "exact right-hand side" if not isinstance(rhs_exact, HighPrecisionReal) else ""
    return CheckRecord(
        check_id="lt-general-gamma",
        params={k: _fmt(v) for k, v in params.items()},
        verdict=verdict,
        witness={"lhs": mpmath.nstr(lhs, 25), "rhs": mpmath.nstr(rhs, 25), "used_precision": str(used)},
        note=exact_note,
    )


# -- coefficient identities -----------------------------------------------------


def check_coefficients_f(d: int) -> CheckRecord:
    """Top two coefficients and degree of the reduced numerator of f."""
    if d < 3:
        raise ValueError("d must be >= 3")
    pair = excess.f_as_ratfun(d)
    p, q = pair.numerator, pair.denominator
    expected_den = excess.f_denominator(d)
    lead_expected = -Fraction(d, 2)
    second_expected = lead_expected * (Fraction(d * d, 3) - (d // 2) - Fraction(1, 3))
    ok = (
        q == expected_den
        and p.degree <= d - 2
        and p.coefficient(d - 2) == lead_expected
        and p.coefficient(d - 3) == second_expected
    )
    witness = {
        "degree": p.degree,
        "lead": p.coefficient(d - 2),
        "lead_expected": lead_expected,
        "second": p.coefficient(d - 3),
        "second_expected": second_expected,
    }
    return _record("coefficients-f", {"d": d}, ok, witness)


def check_coefficients_g_even(d: int) -> CheckRecord:
    """Top two coefficients and degree of the reduced numerator of g, even d."""
    if d < 6 or d % 2 != 0:
        raise ValueError("this identity is stated for even d >= 6")
    pair = excess.g_as_ratfun(d)
    p, q = pair.numerator, pair.denominator
    expected_den = excess.pochhammer_poly(d - 1)
    lead_expected = -Fraction(d, 2)
    second_expected = lead_expected * (Fraction(d * d, 3) - d + Fraction(2, 3))
    ok = (
        q == expected_den
        and p.degree <= d - 3
        and p.coefficient(d - 3) == lead_expected
        and p.coefficient(d - 4) == second_expected
    )
    witness = {
        "degree": p.degree,
        "lead": p.coefficient(d - 3),
        "lead_expected": lead_expected,
        "second": p.coefficient(d - 4),
        "second_expected": second_expected,
    }
    return _record("coefficients-g-even", {"d": d}, ok, witness)


def check_coefficients_h(d: int, a: RationalLike) -> CheckRecord:
    """Top two coefficients of the reduced numerator of h_a, odd d."""
    a = as_rational(a)
    pair = excess.h_a_as_ratfun(d, a)
    p, q = pair.numerator, pair.denominator
    half = Fraction(1, 2)
    expected_den = (
        Polynomial.from_coefficients([-Fraction(1, 4), 0, 1])
        * Polynomial.from_coefficients([Fraction(d - 1, 2), 1])
    )
    for k in range(1, (d - 3) // 2 + 1):
        expected_den = expected_den * Polynomial.from_coefficients([-(k * k), 0, 1])
    lead_expected = -(Fraction(d - 1, 2) + a)
    second_expected = Fraction(d**3 - 6 * d**2 + 8 * d, 12) - Fraction(d - 1, 2) * a
    ok = (
        q == expected_den
        and p.degree == d - 2
        and p.coefficient(d - 2) == lead_expected
        and p.coefficient(d - 3) == second_expected
    )
    witness = {
        "degree": p.degree,
        "lead": p.coefficient(d - 2),
        "lead_expected": lead_expected,
        "second": p.coefficient(d - 3),
        "second_expected": second_expected,
    }
    return _record("coefficients-h", {"d": d, "a": a}, ok, witness)


# -- asymptotics -----------------------------------------------------------------


def asymptotic_residuals(d: int, precision: int = 40) -> tuple[Fraction, float]:
    """d**3-scaled residuals of the sharp constants against their expansions.

    The Q residual is exact; the A - Q gap is exact for even d and evaluated
    at the requested precision for odd d.
    """
    q_result = optima.q_star(d)
    a_result = optima.a_star(d)
    expansion = 1 + Fraction(3, 2 * d) + Fraction(45, 8 * d * d)
    residual_q = d**3 * (q_result.value - expansion)
    if a_result.value is not None:
        residual_a = float(d**3 * (a_result.value - q_result.value))
    else:
        with mp.workdps(precision + 10):
            a_val = mpmath.sqrt(
                mpmath.mpf(a_result.value_squared.numerator)
                / a_result.value_squared.denominator
            )
            q_val = mpmath.mpf(q_result.value.numerator) / q_result.value.denominator
            residual_a = float(d**3 * (a_val - q_val))
    return residual_q, residual_a


def check_asymptotics(d_lo: int, d_hi: int, precision: int = 40) -> CheckRecord:
    """Boundedness and trend of the d**3-scaled expansion residuals."""
    if not (10 <= d_lo <= d_hi <= 400):
        raise ValueError("the asymptotics check runs on ranges within [10, 400]")
    residuals_q: list[tuple[int, float]] = []
    residuals_a: list[tuple[int, float]] = []
    for d in range(d_lo, d_hi + 1):
        rq, ra = asymptotic_residuals(d, precision)
        residuals_q.append((d, abs(float(rq))))
        residuals_a.append((d, abs(ra)))
    bound = float(ASYMPTOTIC_RESIDUAL_BOUND)
    max_q = max(v for _, v in residuals_q)
    max_a = max(v for _, v in residuals_a)
    bounded = max_q <= bound and max_a <= bound

    mid = (d_lo + d_hi) // 2

    def trend_ok(values: list[tuple[int, float]]) -> bool:
        lower = [v for d, v in values if d <= mid]
        upper = [v for d, v in values if d > mid]
        if not upper:
            return True
        return max(upper) <= 1.5 * max(lower)

    trend = trend_ok(residuals_q) and trend_ok(residuals_a)
    ok = bounded and trend
    witness = {
        "max_residual_q": max_q,
        "max_residual_a": max_a,
        "bound": bound,
        "trend_ok": trend,
    }
    return _record(
        "asymptotics", {"d_lo": d_lo, "d_hi": d_hi, "precision": precision}, ok, witness
    )


# -- identity batches --------------------------------------------------------------


def check_pochhammer_recursion(m: int, points: Sequence[Fraction]) -> CheckRecord:
    ok = True
    for t in points:
        t = as_rational(t)
        lhs = m * excess.pochhammer_eval(m - 1, t)
        rhs = excess.pochhammer_eval(m, t) - excess.pochhammer_eval(m, t - 1)
        ok = ok and lhs == rhs
    return _record(
        "pochhammer-recursion", {"m": m, "points": len(points)}, ok, {"holds": ok}
    )


def check_pochhammer_telescoping(m: int, ell_max: int) -> CheckRecord:
    ok = True
    for ell in range(ell_max + 1):
        lhs = m * sum(excess.pochhammer_eval(m - 1, j) for j in range(ell + 1))
        ok = ok and lhs == excess.pochhammer_eval(m, ell)
    return _record(
        "pochhammer-telescoping", {"m": m, "ell_max": ell_max}, ok, {"holds": ok}
    )


def check_hockey_stick(d: int, k_max: int) -> CheckRecord:
    """Closed-form cumulative multiplicity equals term-by-term summation."""
    ok = True
    running = 0
    for k in range(k_max + 1):
        running += spectrum.multiplicity(d, k)
        closed = (d + 2 * k) * math.factorial(d + k - 1) // (
            math.factorial(d) * math.factorial(k)
        )
        ok = ok and running == closed
    return _record("hockey-stick", {"d": d, "k_max": k_max}, ok, {"holds": ok})


def check_multiplicity_formulas(d: int, j_max: int) -> CheckRecord:
    ok = True
    for j in range(j_max + 1):
        via_binomials = math.comb(d - 1 + j, d - 1) + math.comb(d - 2 + j, d - 1)
        ok = ok and spectrum.multiplicity(d, j) == via_binomials
    return _record("multiplicity-formulas", {"d": d, "j_max": j_max}, ok, {"holds": ok})


def check_logderiv(kind: str, d: int) -> CheckRecord:
    ok = excess.logderiv_check(kind, d)
    return _record("logderiv", {"kind": kind, "d": d}, ok, {"holds": ok})


def check_sandwich(d: int, s: RationalLike) -> CheckRecord:
    cert = excess.g_shifted_sandwich_check(d, s)
    return _record(
        "sandwich",
        {"d": d, "s": cert.s},
        cert.holds,
        {"lower": cert.lower, "middle": cert.middle, "upper": cert.upper},
    )


def check_g_quadratic(d_lo: int, d_hi: int) -> CheckRecord:
    """Nonnegative coefficients of the monotonicity certificate quadratic."""
    ok = True
    for d in range(max(4, d_lo), d_hi + 1):
        poly = excess.big_g_monotonicity_quadratic(d)
        ok = ok and all(c >= 0 for c in poly.coefficients)
    return _record("g-monotonicity-quadratic", {"d_lo": d_lo, "d_hi": d_hi}, ok, {"holds": ok})


def check_a_zero_window(d: int) -> CheckRecord:
    ok = optima.a_zero_window_check(d)
    return _record("a-zero-window", {"d": d}, ok, {"holds": ok})


def check_right_limit(d: int, tau_max: int) -> CheckRecord:
    """Q at integer points equals the closed-form right limit of the excess ratio."""
    ok = True
    for tau0 in range(tau_max + 1):
        ok = ok and excess.q_eval(d, tau0) == excess.q_right_limit_value(d, tau0)
    return _record("q-right-limit", {"d": d, "tau_max": tau_max}, ok, {"holds": ok})


def check_r_below_q(d: int, eta: RationalLike) -> CheckRecord:
    """Excess ratio never exceeds Q at tau = (eta + 1 - d)/2."""
    eta = as_rational(eta)
    if eta <= d - 1:
        raise ValueError("need eta > d - 1")
    tau = (eta + 1 - d) / 2
    lhs = excess.r_eval(d, eta)
    rhs = excess.q_eval(d, tau)
    return _record("r-below-q", {"d": d, "eta": eta}, lhs <= rhs, {"r": lhs, "q": rhs})


# -- CLR checks -----------------------------------------------------------------


def check_counterexample_advisory() -> CheckRecord:
    """d=6, eta=11.1 beats the semiclassical count; reported values are advisory."""
    d, eta = 6, Fraction(111, 10)
    count = spectrum.counting_function(spectrum.SpectrumParams(d=d, eta=eta))
    rhs = phase_space.clr_rhs(d, eta)
    ratio = Fraction(count) / rhs
    ok = ratio > 1
    note = (
        "computed count 112 and semiclassical value ~81.18 differ from the "
        "previously reported 121 and ~81.81; the qualitative excess (ratio > 1) "
        "is what this check asserts"
    )
    return _record(
        "counterexample-advisory",
        {"d": d, "eta": eta},
        ok,
        {"count": count, "semiclassical": float(rhs), "ratio": float(ratio)},
        note,
    )


def check_q_star_value(d: int, expected: RationalLike) -> CheckRecord:
    result = optima.q_star(d)
    expected = as_rational(expected)
    return _record(
        "q-star-value",
        {"d": d},
        result.value == expected,
        {"value": result.value, "expected": expected, "argmax": result.argmax_ell},
    )


def check_q_star_exceeds_one(d: int) -> CheckRecord:
    result = optima.q_star(d)
    return _record(
        "q-star-exceeds-one",
        {"d": d},
        result.value > 1,
        {"value": float(result.value), "argmax": result.argmax_ell},
    )


def check_a_exceeds_q(d: int) -> CheckRecord:
    """A's window maximum strictly dominates Q's, compared through squares."""
    a_result = optima.a_star(d)
    q_result = optima.q_star(d)
    ok = a_result.value_squared > q_result.value_squared
    return _record(
        "a-exceeds-q",
        {"d": d},
        ok,
        {
            "a_star_squared": float(a_result.value_squared),
            "q_star_squared": float(q_result.value_squared),
        },
    )


def check_counterexample_scan(d: int, grid: Sequence[Fraction], expect_hits: bool) -> CheckRecord:
    hits = optima.counterexample_scan(d, list(grid))
    ok = bool(hits) == expect_hits
    witness = {"hits": len(hits)}
    if hits:
        witness["first_eta"] = hits[0][0]
        witness["first_ratio"] = float(hits[0][1])
    return _record(
        "counterexample-scan",
        {"d": d, "grid_size": len(grid), "expect_hits": expect_hits},
        ok,
        witness,
    )


# -- suites ----------------------------------------------------------------------


def _d_list(d_range: tuple[int, int] | None, default: tuple[int, int]) -> list[int]:
    lo, hi = d_range if d_range is not None else default
    return list(range(lo, hi + 1))


def suite_lt_gamma1(d_range: tuple[int, int] | None = None, precision: int = 30) -> list[CheckRecord]:
    records = []
    for d in _d_list(d_range, (4, 10)):
        if d < 4:
            continue
        for k in range(1, 401):
            records.append(check_lt_gamma1(d, Fraction(d - 1) + Fraction(k, 10)))
    for d in _d_list(d_range, (4, 10)):
        if d < 3:
            continue
        for gamma in (Fraction(3, 2), Fraction(2), Fraction(7, 3)):
            if 1 <= gamma < Fraction(d, 2):
                records.append(
                    check_lt_general_gamma(d, Fraction(2 * d), gamma, precision=precision)
                )
    return records


def suite_d3_envelopes(d_range: tuple[int, int] | None = None, precision: int = 30) -> list[CheckRecord]:
    records = []
    for k in range(201, 2001):
        records.append(check_d3_envelopes(Fraction(k, 100)))
    for m in range(1, 11):
        for j in range(1, 9):
            records.append(check_phi_envelope(m, Fraction(j, 8)))
    return records


def suite_coefficients(d_range: tuple[int, int] | None = None, precision: int = 30) -> list[CheckRecord]:
    records = []
    ds = _d_list(d_range, (3, 60))
    for d in ds:
        if d >= 3:
            records.append(check_coefficients_f(d))
    for d in ds:
        if d % 2 == 0 and 6 <= d <= 40:
            records.append(check_coefficients_g_even(d))
    for d in ds:
        if d % 2 == 1 and 5 <= d <= 39:
            records.append(check_coefficients_h(d, Fraction(1, 2)))
            records.append(check_coefficients_h(d, excess.squeeze_coefficient(d)))
    return records


def suite_identities(d_range: tuple[int, int] | None = None, precision: int = 30) -> list[CheckRecord]:
    records = []
    rng = random.Random(20240814)
    for m in range(1, 41):
        points = [Fraction(rng.randint(-400, 400), rng.randint(1, 40)) for _ in range(10)]
        records.append(check_pochhammer_recursion(m, points))
    for m in range(1, 21):
        records.append(check_pochhammer_telescoping(m, 50))
    ds = _d_list(d_range, (3, 12))
    for d in ds:
        records.append(check_appendix_sums(d))
    for d in range(3, 31):
        records.append(check_hockey_stick(d, 60))
        records.append(check_multiplicity_formulas(d, 60))
    for d in ds:
        if 3 <= d <= 12:
            records.append(check_logderiv("Q", d))
        if 3 <= d <= 10:
            records.append(check_logderiv("A_squared", d))
    for d, ell in [(4, 0), (5, 3), (10, 20)]:
        records.append(check_abel_bound(d, ell))
    for d in ds:
        if d >= 4:
            for ell in (0, 2, 5, 10, 20):
                records.append(check_abel_bound(d, ell))
    for d in ds:
        if 4 <= d <= 12:
            records.append(check_big_g_bound(d, 200))
    records.append(check_g_quadratic(4, 60))
    for d in ds:
        if 3 <= d <= 10:
            records.append(check_right_limit(d, 40))
    for d in ds:
        if d % 2 == 1 and d >= 5:
            base = Fraction(d - 3, 2)
            for s in (base + 1, base + 5, Fraction(d * d)):
                records.append(check_sandwich(d, s))
            records.append(check_a_zero_window(d))
    rng = random.Random(911)
    for _ in range(100):
        d = rng.randint(3, 12)
        eta = Fraction(d - 1) + Fraction(rng.randint(1, 4000), 100)
        records.append(check_r_below_q(d, eta))
    return records


def suite_asymptotics(d_range: tuple[int, int] | None = None, precision: int = 40) -> list[CheckRecord]:
    lo, hi = d_range if d_range is not None else (50, 200)
    lo, hi = max(10, lo), min(400, hi)
    if lo > hi:
        raise ValueError("asymptotics range is empty after clipping to [10, 400]")
    return [check_asymptotics(lo, hi, precision)]


def suite_clr(d_range: tuple[int, int] | None = None, precision: int = 30) -> list[CheckRecord]:
    records = [check_counterexample_advisory()]
    records.append(check_q_star_value(3, Fraction(3)))
    records.append(check_q_star_value(4, Fraction(64, 27)))
    records.append(check_q_star_value(5, Fraction(15, 8)))
    for d in _d_list(d_range, (3, 60)):
        if 3 <= d <= 60:
            records.append(check_q_star_exceeds_one(d))
            records.append(check_a_exceeds_q(d))
    records.append(check_counterexample_scan(6, [Fraction(111, 10)], expect_hits=True))
    records.append(check_counterexample_scan(3, [Fraction(3)], expect_hits=False))
    records.append(check_counterexample_scan(3, [Fraction(201, 100)], expect_hits=True))
    return records


SUITES: dict[str, Callable[..., list[CheckRecord]]] = {
    "lt-gamma1": suite_lt_gamma1,
    "d3-envelopes": suite_d3_envelopes,
    "coefficients": suite_coefficients,
    "identities": suite_identities,
    "asymptotics": suite_asymptotics,
    "clr": suite_clr,
}

SUITE_ORDER = ["lt-gamma1", "d3-envelopes", "coefficients", "identities", "asymptotics", "clr"]


def run_suite(
    name: str, d_range: tuple[int, int] | None = None, precision: int = 30
) -> list[CheckRecord]:
    if name == "all":
        records = []
        for suite_name in SUITE_ORDER:
            records.extend(SUITES[suite_name](d_range=d_range, precision=precision))
        return records
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if name == "asymptotics" and precision < 40:
        precision = 40
    return SUITES[name](d_range=d_range, precision=precision)


def records_to_jsonl(records: Iterable[CheckRecord]) -> str:
    return "".join(record.to_json() + "\n" for record in records)
