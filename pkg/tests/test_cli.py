"""End-to-end CLI behaviour: output shapes, exit codes, byte stability."""

import json
from fractions import Fraction

import pytest

from coulomb_sharp import cli, verification
from coulomb_sharp.cli import exact_decimal, main, render_decimal


class TestRendering:
    def test_render_decimal_significant_digits(self):
        assert render_decimal(Fraction(1, 3)).startswith("0.333333333333333")
        assert render_decimal(Fraction(0)) == "0"

    def test_exact_decimal(self):
        assert exact_decimal(Fraction(201, 100)) == "2.01"
        assert exact_decimal(Fraction(-11, 2)) == "-5.5"
        assert exact_decimal(Fraction(7)) == "7"
        assert exact_decimal(Fraction(1, 3)) is None

    def test_decimal_eta_roundtrips_to_fraction(self, capsys):
        assert main(["spectrum", "--d", "6", "--eta", "11.1", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["eta"] == "111/10"


class TestSpectrumCommand:
    def test_counterexample_instance(self, capsys):
        assert main(["spectrum", "--d", "6", "--eta", "11.1", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["counting_function"] == "112"
        assert len(payload["levels"]) == 4
        assert payload["levels"][0]["multiplicity"] == "1"

    def test_empty_spectrum_text(self, capsys):
        assert main(["spectrum", "--d", "3", "--eta", "2"]) == 0
        out = capsys.readouterr().out
        assert "empty spectrum" in out
        assert "N = 0" in out

    def test_single_level_exact_value(self, capsys):
        assert main(["spectrum", "--d", "3", "--eta", "3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["levels"][0]["lambda_over_Lambda"] == "-5/4"

    def test_bad_eta_is_usage_error(self, capsys):
        assert main(["spectrum", "--d", "3", "--eta", "x"]) == 2

    def test_bad_dimension_is_usage_error(self, capsys):
        assert main(["spectrum", "--d", "2", "--eta", "5"]) == 2

    def test_missing_argument_is_usage_error(self, capsys):
        assert main(["spectrum", "--d", "3"]) == 2


class TestConstantsCommand:
    def test_q_star_d3(self, capsys):
        assert main(["constants", "--d", "3", "--which", "q-star"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["value"] == "3"

    def test_a_star_d5(self, capsys):
        assert main(["constants", "--d", "5", "--which", "a-star"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["value_squared"] == "16384/3375"
        assert Fraction(payload["value_squared"]) == Fraction(147456, 30375)
        assert payload["value"] is None

    def test_t_star_d6_within_window(self, capsys):
        assert main(["constants", "--d", "6", "--which", "t-star", "--tol", "1/1000000"]) == 0
        payload = json.loads(capsys.readouterr().out)
        lower = Fraction(payload["bracket"]["lower"])
        upper = Fraction(payload["bracket"]["upper"])
        assert Fraction(-2, 3) < lower < upper < Fraction(7, 3)
        assert upper - lower <= Fraction(1, 10**6)

    def test_t_star_d3_fails_with_explanation(self, capsys):
        assert main(["constants", "--d", "3", "--which", "t-star"]) == 1
        assert "strictly decreasing" in capsys.readouterr().err

    def test_bad_tolerance_usage_error(self, capsys):
        assert main(["constants", "--d", "6", "--which", "t-star", "--tol", "0"]) == 2


class TestVerifyCommand:
    def test_d3_envelopes_suite(self, tmp_path, capsys):
        out = tmp_path / "report.jsonl"
        assert main(["verify", "--suite", "d3-envelopes", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1880
        payload = json.loads(lines[0])
        assert list(payload) == ["check_id", "params", "verdict", "witness", "note"]

    def test_report_byte_stable(self, tmp_path, capsys):
        first = tmp_path / "a.jsonl"
        second = tmp_path / "b.jsonl"
        assert main(["verify", "--suite", "clr", "--d-range", "3..8", "--out", str(first)]) == 0
        assert main(["verify", "--suite", "clr", "--d-range", "3..8", "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_unknown_suite_usage_error(self, capsys):
        assert main(["verify", "--suite", "bogus"]) == 2

    def test_bad_d_range_usage_error(self, capsys):
        assert main(["verify", "--suite", "clr", "--d-range", "9"]) == 2

    def test_failing_record_exits_one(self, tmp_path, capsys, monkeypatch):
        def broken_suite(d_range=None, precision=30):
            return [
                verification.CheckRecord(
                    check_id="demo", params={}, verdict="fail", witness={"lhs": "2", "rhs": "1"}
                )
            ]

        monkeypatch.setitem(verification.SUITES, "clr", broken_suite)
        out = tmp_path / "report.jsonl"
        assert main(["verify", "--suite", "clr", "--out", str(out)]) == 1
        assert "FAILED demo" in capsys.readouterr().err

    def test_config_driven_sweep(self, tmp_path, capsys):
        config = tmp_path / "sweep.json"
        out = tmp_path / "from_config.jsonl"
        config.write_text(
            json.dumps(
                {
                    "d_values": [4, 5],
                    "eta_grid": {"start": "3.1", "stop": "3.5", "step": "1/10"},
                    "gamma": "1",
                    "suites": ["clr"],
                    "output_path": str(out),
                    "precision": 30,
                }
            )
        )
        assert main(["verify", "--config", str(config), "--d-range", "3..6"]) == 0
        lines = out.read_text().splitlines()
        ids = {json.loads(line)["check_id"] for line in lines}
        assert "lt-gamma1" in ids  # the custom grid sweep ran
        assert "q-star-exceeds-one" in ids  # the configured suite ran

    def test_invalid_config_usage_error(self, tmp_path, capsys):
        config = tmp_path / "bad.json"
        config.write_text(json.dumps({"eta_grid": {"start": "5", "stop": "4", "step": "1/10"}}))
        assert main(["verify", "--config", str(config)]) == 2

    def test_env_precision_override(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv(cli.PRECISION_ENV_VAR, "oops")
        assert main(["verify", "--suite", "clr", "--d-range", "3..4", "--out", str(tmp_path / "r.jsonl")]) == 2
        monkeypatch.setenv(cli.PRECISION_ENV_VAR, "35")
        assert cli.default_precision() == 35


class TestFigureCommand:
    def test_lt_d3_touches_envelope_at_eta5(self, tmp_path, capsys):
        out = tmp_path / "lt.csv"
        assert main(["figure", "--which", "lt-d3", "--out", str(out)]) == 0
        rows = [line.split(",") for line in out.read_text().splitlines()]
        header, data = rows[0], rows[1:]
        assert header[0].startswith("eta")
        at_five = next(r for r in data if r[0] == "5")
        assert at_five[1] == at_five[3]  # middle equals upper envelope exactly

    def test_lt_d3_containment_everywhere(self, tmp_path):
        out = tmp_path / "lt.csv"
        assert main(["figure", "--which", "lt-d3", "--out", str(out)]) == 0
        for row in out.read_text().splitlines()[1:]:
            _, middle, lower, upper = row.split(",")
            assert Fraction(lower) <= Fraction(middle) <= Fraction(upper)

    def test_rd_vs_qd_rows_bounded(self, tmp_path):
        out = tmp_path / "rd.csv"
        assert main(["figure", "--which", "rd-vs-qd", "--out", str(out)]) == 0
        rows = out.read_text().splitlines()[1:]
        assert len(rows) == 800
        for row in rows:
            _, q5, r5, q6, r6 = row.split(",")
            assert Fraction(r5) <= Fraction(q5)
            assert Fraction(r6) <= Fraction(q6)

    def test_f_plot_four_sign_changes(self, tmp_path):
        out = tmp_path / "f.csv"
        assert main(["figure", "--which", "f-plot", "--out", str(out)]) == 0
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        ts = [Fraction(r[0]) for r in rows]
        values = [Fraction(r[1]) for r in rows]
        step = Fraction(1, 100)
        flips = 0
        for i in range(1, len(ts)):
            if ts[i] - ts[i - 1] == step and values[i - 1] != 0 and values[i] != 0:
                if (values[i - 1] > 0) != (values[i] > 0):
                    flips += 1
        assert flips == 4

    def test_csv_byte_stable(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        assert main(["figure", "--which", "f-plot", "--out", str(a)]) == 0
        assert main(["figure", "--which", "f-plot", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_lf_line_endings(self, tmp_path):
        out = tmp_path / "lt.csv"
        assert main(["figure", "--which", "rd-vs-qd", "--out", str(out)]) == 0
        raw = out.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")

    def test_bad_step_usage_error(self, tmp_path, capsys):
        assert main(["figure", "--which", "f-plot", "--out", str(tmp_path / "x.csv"), "--step", "-1"]) == 2
