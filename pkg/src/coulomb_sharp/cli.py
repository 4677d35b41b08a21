"""Command-line front door: single computations, verification sweeps, figure data.

Exit codes: 0 on success / all checks passing, 1 on a mathematical failure or
an inconclusive strict comparison, 2 on usage errors.  All eta inputs are
parsed as exact rationals (decimal strings become exact scaled integers), so
level counts never depend on binary floating point.  Reports are written
atomically and are byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import excess, optima, spectrum, verification
from .exact import CertificationError, parse_rational
from .highprec import PrecisionError, sqrt_of_fraction

DEFAULT_PRECISION = 30
PRECISION_ENV_VAR = "COULOMB_SHARP_PRECISION"
DECIMAL_SIGNIFICANT_DIGITS = 15


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV_VAR)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{PRECISION_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{PRECISION_ENV_VAR} must be positive")
    return value


def render_decimal(x: Fraction, significant: int = DECIMAL_SIGNIFICANT_DIGITS) -> str:
    """Correctly-rounded fixed-point rendering with the given significant digits."""
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = significant
        value = Decimal(x.numerator) / Decimal(x.denominator)
    return format(value, "f")


def exact_decimal(x: Fraction) -> str | None:
    """Finite decimal expansion when the denominator is 2^a 5^b, else None."""
    den = x.denominator
    e2 = e5 = 0
    while den % 2 == 0:
        den //= 2
        e2 += 1
    while den % 5 == 0:
        den //= 5
        e5 += 1
    if den != 1:
        return None
    shift = max(e2, e5)
    scaled = x.numerator * 10**shift // x.denominator
    digits = str(abs(scaled)).rjust(shift + 1, "0")
    sign = "-" if scaled < 0 else ""
    if shift == 0:
        return sign + digits
    return f"{sign}{digits[:-shift]}.{digits[-shift:]}"


def render_grid_value(x: Fraction) -> str:
    return exact_decimal(x) or render_decimal(x)


# -- sweep configuration -----------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """Optional JSON-config mirror for verify sweeps."""

    d_values: list[int] | None = None
    eta_grid: tuple[Fraction, Fraction, Fraction] | None = None
    gamma: Fraction | None = None
    suites: list[str] | None = None
    output_path: str | None = None
    precision: int | None = None

    @staticmethod
    def from_json_file(path: str) -> "SweepConfig":
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        eta_grid = None
        if data.get("eta_grid") is not None:
            grid = data["eta_grid"]
            start = parse_rational(str(grid["start"]))
            stop = parse_rational(str(grid["stop"]))
            step = parse_rational(str(grid["step"]))
            if step <= 0:
                raise ValueError("eta_grid.step must be positive")
            if not start < stop:
                raise ValueError("eta_grid needs start < stop")
            eta_grid = (start, stop, step)
        gamma = parse_rational(str(data["gamma"])) if data.get("gamma") is not None else None
        return SweepConfig(
            d_values=list(data["d_values"]) if data.get("d_values") is not None else None,
            eta_grid=eta_grid,
            gamma=gamma,
            suites=list(data["suites"]) if data.get("suites") is not None else None,
            output_path=data.get("output_path"),
            precision=data.get("precision"),
        )


def expand_eta_grid(grid: tuple[Fraction, Fraction, Fraction]) -> list[Fraction]:
    start, stop, step = grid
    values = []
    eta = start
    while eta <= stop:
        values.append(eta)
        eta += step
    return values


def custom_lt_sweep(
    d_values: Sequence[int],
    etas: Sequence[Fraction],
    gamma: Fraction,
    precision: int,
) -> list[verification.CheckRecord]:
    """Config-driven inequality sweep over a rectangular (d, eta) grid."""
    records = []
    for d in d_values:
        for eta in etas:
            if gamma == 1:
                records.append(verification.check_lt_gamma1(d, eta))
            else:
                records.append(verification.check_lt_general_gamma(d, eta, gamma, precision))
    return records


# -- figure datasets -----------------------------------------------------------


@dataclass(frozen=True)
class FigureDataset:
    figure_id: str
    columns: dict[str, list[str]]
    metadata: str

    def __post_init__(self) -> None:
        lengths = {len(values) for values in self.columns.values()}
        if len(lengths) != 1:
            raise ValueError("all columns must have equal length")
        if lengths == {0}:
            raise ValueError("figure dataset must contain rows")

    @property
    def row_count(self) -> int:
        return len(next(iter(self.columns.values())))

    def to_csv(self) -> str:
        headers = list(self.columns)
        lines = [",".join(headers)]
        for i in range(self.row_count):
            lines.append(",".join(self.columns[name][i] for name in headers))
        return "\n".join(lines) + "\n"


def figure_lt_d3(step: Fraction = Fraction(1, 100)) -> FigureDataset:
    """Trace minus the two leading envelope terms, with both correction bounds."""
    etas: list[str] = []
    excess_col: list[str] = []
    lower_col: list[str] = []
    upper_col: list[str] = []
    eta = 2 + step
    while eta <= 20:
        trace = spectrum.riesz_mean_d3_closed_form(eta)
        middle = trace - (eta**3 / 12 - eta**2 / 8)
        lower = -eta / 12
        upper = Fraction(2 * math.ceil(eta / 2) - 1, 24)
        etas.append(render_grid_value(eta))
        excess_col.append(render_decimal(middle))
        lower_col.append(render_decimal(lower))
        upper_col.append(render_decimal(upper))
        eta += step
    return FigureDataset(
        figure_id="lt-d3",
        columns={
            "eta[Lambda=1]": etas,
            "trace_excess[Lambda]": excess_col,
            "lower_envelope[Lambda]": lower_col,
            "upper_envelope[Lambda]": upper_col,
        },
        metadata="order-1 trace minus leading and second-order terms, d=3, oscillating between its envelopes",
    )


def figure_rd_vs_qd(step: Fraction = Fraction(1, 100)) -> FigureDataset:
    """Excess ratio against its upper function Q for d = 5 and d = 6."""
    taus: list[str] = []
    cols: dict[int, tuple[list[str], list[str]]] = {5: ([], []), 6: ([], [])}
    tau = step
    while tau <= 8:
        taus.append(render_grid_value(tau))
        for d, (q_col, r_col) in cols.items():
            q_col.append(render_decimal(excess.q_eval(d, tau)))
            r_col.append(render_decimal(excess.r_eval(d, 2 * tau + d - 1)))
        tau += step
    return FigureDataset(
        figure_id="rd-vs-qd",
        columns={
            "tau[Lambda=1]": taus,
            "q_d5[ratio]": cols[5][0],
            "r_d5[ratio]": cols[5][1],
            "q_d6[ratio]": cols[6][0],
            "r_d6[ratio]": cols[6][1],
        },
        metadata="eigenvalue-count excess ratio sampled at eta = 2 tau + d - 1 against its envelope Q",
    )


def figure_f_plot(step: Fraction = Fraction(1, 100)) -> FigureDataset:
    """The log-derivative of Q for d = 6, with pole-adjacent windows removed."""
    d = 6
    poles = sorted({-root for _, root in excess.f_terms(d)})
    guard = Fraction(1, 20)
    ts: list[str] = []
    values: list[str] = []
    t = Fraction(-11, 2)
    while t <= 4:
        if all(abs(t - pole) > guard for pole in poles):
            ts.append(render_grid_value(t))
            values.append(render_decimal(excess.f_eval(d, t)))
        t += step
    return FigureDataset(
        figure_id="f-plot",
        columns={"t[Lambda=1]": ts, "f6[1/t]": values},
        metadata="log-derivative of the d=6 excess function; four sign changes away from the poles",
    )


FIGURES = {
    "lt-d3": figure_lt_d3,
    "rd-vs-qd": figure_rd_vs_qd,
    "f-plot": figure_f_plot,
}


def _atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


# -- commands -------------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace) -> int:
    try:
        eta = parse_rational(args.eta)
        params = spectrum.SpectrumParams(d=args.d, eta=eta)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    level_rows = spectrum.levels(params)
    count = spectrum.counting_function(params)
    if args.format == "json":
        payload = {
            "d": params.d,
            "eta": str(params.eta),
            "tau": str(params.tau),
            "ell": params.ell,
            "levels": [
                {
                    "j": level.j,
                    "multiplicity": str(level.multiplicity),
                    "lambda_over_Lambda": str(level.lambda_over_Lambda),
                    "lambda_over_Lambda_decimal": render_decimal(level.lambda_over_Lambda),
                }
                for level in level_rows
            ],
            "counting_function": str(count),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"shifted Coulomb spectrum: d = {params.d}, eta = {params.eta}")
    if not level_rows:
        print("empty spectrum (eta <= d - 1)")
    else:
        print(f"{'j':>4}  {'multiplicity':>16}  {'lambda/Lambda':>24}  decimal")
        for level in level_rows:
            print(
                f"{level.j:>4}  {level.multiplicity:>16}  "
                f"{str(level.lambda_over_Lambda):>24}  {render_decimal(level.lambda_over_Lambda)}"
            )
    print(f"counting function N = {count}")
    return 0


def _star_payload(which: str, result: optima.StarResult) -> dict:
    value_decimal = None
    if result.value is not None:
        value_decimal = render_decimal(result.value)
    else:
        value_decimal = sqrt_of_fraction(
            result.value_squared, DECIMAL_SIGNIFICANT_DIGITS
        ).to_decimal()
    return {
        "d": result.d,
        "which": which,
        "argmax_ell": result.argmax_ell,
        "candidate_window": list(result.candidate_window),
        "value": str(result.value) if result.value is not None else None,
        "value_decimal": value_decimal,
        "value_squared": str(result.value_squared),
        "value_squared_decimal": render_decimal(result.value_squared),
        "tie_ell": result.tie_ell,
    }


def cmd_constants(args: argparse.Namespace) -> int:
    try:
        tol = parse_rational(args.tol)
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        if args.d < 3:
            raise ValueError("d must be >= 3")
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.which == "q-star":
        print(json.dumps(_star_payload("q-star", optima.q_star(args.d)), indent=2))
        return 0
    if args.which == "a-star":
        print(json.dumps(_star_payload("a-star", optima.a_star(args.d)), indent=2))
        return 0
    if args.d == 3:
        print(
            "t-star is undefined for d = 3: the excess function is strictly "
            "decreasing beyond -1, so its integer maximum sits at the boundary level 0",
            file=sys.stderr,
        )
        return 1
    try:
        bracket = optima.locate_t_star(args.d, tol)
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 1
    lo_bound, hi_bound = optima.t_star_bounds(args.d)
    payload = {
        "d": args.d,
        "which": "t-star",
        "bracket": {
            "lower": str(bracket.lower),
            "upper": str(bracket.upper),
            "lower_decimal": render_decimal(bracket.lower),
            "upper_decimal": render_decimal(bracket.upper),
            "width": str(bracket.width),
        },
        "window": {"lower": str(lo_bound), "upper": str(hi_bound)},
    }
    print(json.dumps(payload, indent=2))
    return 0


def _parse_d_range(text: str) -> tuple[int, int]:
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise ValueError("d-range must look like A..B")
    lo, hi = int(lo_text), int(hi_text)
    if lo > hi:
        raise ValueError("d-range needs A <= B")
    return lo, hi


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        precision = args.precision if args.precision is not None else default_precision()
        config = SweepConfig.from_json_file(args.config) if args.config else SweepConfig()
        if args.precision is None and config.precision is not None:
            precision = config.precision
        d_range = _parse_d_range(args.d_range) if args.d_range else None
        suites = [args.suite] if args.suite else (config.suites or ["all"])
        out_path = args.out or config.output_path or "verification_report.jsonl"
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    records: list[verification.CheckRecord] = []
    try:
        for suite in suites:
            records.extend(verification.run_suite(suite, d_range=d_range, precision=precision))
        if config.d_values and config.eta_grid:
            records.extend(
                custom_lt_sweep(
                    config.d_values,
                    expand_eta_grid(config.eta_grid),
                    config.gamma if config.gamma is not None else Fraction(1),
                    precision,
                )
            )
    except KeyError as exc:
        print(f"usage error: unknown suite {exc}", file=sys.stderr)
        return 2
    _atomic_write_text(out_path, verification.records_to_jsonl(records))
    total = len(records)
    failures = [r for r in records if not r.ok]
    by_verdict: dict[str, int] = {}
    for record in records:
        by_verdict[record.verdict] = by_verdict.get(record.verdict, 0) + 1
    summary = ", ".join(f"{count} {verdict}" for verdict, count in sorted(by_verdict.items()))
    print(f"{total} checks: {summary}")
    print(f"report written to {out_path}")
    if failures:
        for record in failures[:10]:
            print(f"FAILED {record.check_id} {record.params}", file=sys.stderr)
        return 1
    return 0


def cmd_figure(args: argparse.Namespace) -> int:
    try:
        step = parse_rational(args.step) if args.step else Fraction(1, 100)
        if step <= 0:
            raise ValueError("step must be positive")
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    dataset = FIGURES[args.which](step)
    _atomic_write_text(args.out, dataset.to_csv())
    print(f"{dataset.figure_id}: {dataset.row_count} rows written to {args.out}")
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coulomb-sharp",
        description=(
            "Exact spectral quantities, sharp constants and machine verification "
            "for the shifted Coulomb Hamiltonian (all in units Lambda = 1)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="negative levels, multiplicities and the count")
    p_spec.add_argument("--d", type=int, required=True, help="dimension, d >= 3")
    p_spec.add_argument("--eta", required=True, help="coupling ratio as P/Q or decimal text")
    p_spec.add_argument("--format", choices=("text", "json"), default="text")
    p_spec.set_defaults(func=cmd_spectrum)

    p_const = sub.add_parser("constants", help="sharp constants and maximizer brackets")
    p_const.add_argument("--d", type=int, required=True)
    p_const.add_argument("--which", choices=("q-star", "a-star", "t-star"), required=True)
    p_const.add_argument("--tol", default="1/1000000", help="bracket width for t-star")
    p_const.set_defaults(func=cmd_constants)

    p_verify = sub.add_parser("verify", help="run verification suites, emit a JSONL report")
    p_verify.add_argument(
        "--suite",
        choices=tuple(verification.SUITES) + ("all",),
        help="suite to run (defaults to config suites or 'all')",
    )
    p_verify.add_argument("--d-range", help="dimension range A..B")
    p_verify.add_argument("--out", help="report path (JSON lines)")
    p_verify.add_argument("--precision", type=int, help="significant digits for real paths")
    p_verify.add_argument("--config", help="JSON file mirroring the sweep configuration")
    p_verify.set_defaults(func=cmd_verify)

    p_fig = sub.add_parser("figure", help="emit figure data as CSV")
    p_fig.add_argument("--which", choices=tuple(FIGURES), required=True)
    p_fig.add_argument("--out", required=True, help="output CSV path")
    p_fig.add_argument("--step", help="grid step as an exact rational (default 1/100)")
    p_fig.set_defaults(func=cmd_figure)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (CertificationError, PrecisionError) as exc:
        print(f"mathematical failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
