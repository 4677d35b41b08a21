"""Self-validating high-precision evaluation contract."""

from fractions import Fraction

import mpmath
import pytest

from coulomb_sharp.highprec import (
    HighPrecisionReal,
    power_of_fraction,
    real_from_fraction,
    sqrt_of_fraction,
    validated_eval,
)


def test_pi_to_thirty_digits():
    result = validated_eval(lambda: +mpmath.pi, 30)
    with mpmath.mp.workdps(50):
        reference = +mpmath.pi
        assert abs(result.value - reference) < mpmath.mpf(10) ** -29


def test_sqrt_squares_back():
    result = sqrt_of_fraction(Fraction(2), 40)
    with mpmath.mp.workdps(60):
        assert abs(result.value**2 - 2) < mpmath.mpf(10) ** -38


def test_negative_sqrt_rejected():
    with pytest.raises(ValueError):
        sqrt_of_fraction(Fraction(-1), 20)


def test_cube_root_of_eight():
    result = power_of_fraction(Fraction(8), Fraction(1, 3), 30)
    with mpmath.mp.workdps(50):
        assert abs(result.value - 2) < mpmath.mpf(10) ** -28


def test_zero_is_accepted_exactly():
    result = validated_eval(lambda: mpmath.mpf(0), 20)
    assert result.value == 0


def test_fraction_roundtrip_precision():
    x = Fraction(123456789, 987654321)
    result = real_from_fraction(x, 35)
    with mpmath.mp.workdps(60):
        reference = mpmath.mpf(x.numerator) / x.denominator
        assert abs(result.value - reference) <= abs(reference) * mpmath.mpf(10) ** -34


def test_carries_requested_precision():
    assert real_from_fraction(Fraction(1, 3), 25).precision == 25


def test_repr_contains_digits():
    value = HighPrecisionReal(mpmath.mpf(2), 10)
    assert "2.0" in repr(value)
