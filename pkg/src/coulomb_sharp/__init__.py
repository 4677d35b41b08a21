"""Exact spectral constants and machine verification for the shifted Coulomb Hamiltonian.

The package computes the negative spectrum, semiclassical phase-space
quantities, sharp excess constants and certified maximizer locations of the
operator -Delta - kappa/|x| + Lambda in dimension d >= 3, entirely in exact
rational arithmetic wherever the mathematics permits, and machine-checks the
corresponding family of inequalities and identities.
"""

from .exact import (
    CertificationError,
    EndpointRootError,
    Polynomial,
    Rational,
    RationalFunctionPair,
    RootBracket,
    bisect_root,
    expand_linear_factors,
    isolate_unique_root,
    log_derivative,
    parse_rational,
    poly_gcd,
    ratfun_reduce,
    sturm_count,
)
from .highprec import HighPrecisionReal, PrecisionError, validated_eval
from .phase_space import PiScaledRational, clr_rhs, gamma_at, lt_rhs, semiclassical_constant
from .spectrum import (
    LevelData,
    RieszQuery,
    SpectrumParams,
    counting_function,
    levels,
    multiplicity,
    riesz_mean,
    riesz_mean_d3_closed_form,
)
from .optima import StarResult, a_star, counterexample_scan, locate_t_star, q_star
from .verification import CheckRecord, run_suite

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "CheckRecord",
    "EndpointRootError",
    "HighPrecisionReal",
    "LevelData",
    "PiScaledRational",
    "Polynomial",
    "PrecisionError",
    "Rational",
    "RationalFunctionPair",
    "RieszQuery",
    "RootBracket",
    "SpectrumParams",
    "StarResult",
    "a_star",
    "bisect_root",
    "clr_rhs",
    "counterexample_scan",
    "counting_function",
    "expand_linear_factors",
    "gamma_at",
    "isolate_unique_root",
    "levels",
    "locate_t_star",
    "log_derivative",
    "lt_rhs",
    "multiplicity",
    "parse_rational",
    "poly_gcd",
    "q_star",
    "ratfun_reduce",
    "riesz_mean",
    "riesz_mean_d3_closed_form",
    "run_suite",
    "semiclassical_constant",
    "sturm_count",
    "validated_eval",
    "__version__",
]
