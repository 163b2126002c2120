"""Front end: config parsing, subcommands, exit codes, JSON round trips."""

import json
from fractions import Fraction

import pytest

from distpf import (
    AngularLabel,
    DeltaSum,
    DeltaTerm,
    ExactScalar,
    PseudoFunction,
    RadialSeries,
    laplacian,
)
from distpf.classify import VerdictKind, classify_solution
from distpf.cli import (
    ConfigError,
    ProblemSpec,
    build_spec,
    main,
    parse_config,
    parse_expr,
    parse_scalar,
    parse_series,
    parse_verdict,
    run,
    serialize_expr,
    serialize_scalar,
    serialize_series,
    serialize_verdict,
)
from distpf.distlap import PotentialModel


class TestConfigParsing:
    def test_basic(self):
        cfg = parse_config("# comment\nv[-1] = -2\n\nell = 0  # inline\nenergy = -1\n")
        assert cfg == {"v[-1]": "-2", "ell": "0", "energy": "-1"}

    def test_line_diagnostics(self):
        with pytest.raises(ConfigError, match="line 2"):
            parse_config("ell = 1\nnot a pair\n")

    def test_empty_key(self):
        with pytest.raises(ConfigError, match="line 1"):
            parse_config("= 3\n")

    def test_build_spec_potential(self):
        spec = build_spec({"v[-1]": "-2", "v[0]": "1", "v[2]": "1/3"}, {})
        assert spec.potential.v_minus1 == Fraction(-2)
        assert spec.potential.v == (Fraction(1), Fraction(0), Fraction(1, 3))

    def test_build_spec_rejects_strong_singularity(self):
        with pytest.raises(ConfigError, match=r"v\[-2\]"):
            build_spec({"v[-2]": "1"}, {})

    def test_field_diagnostics(self):
        with pytest.raises(ConfigError, match="energy"):
            build_spec({"energy": "three"}, {})

    def test_flags_override_config(self):
        spec = build_spec({"ell": "1"}, {"ell": 2})
        assert spec.ell == 2

    def test_float_mode_numbers(self):
        spec = build_spec({"energy": "0.5", "coeffs": "1, 2.5", "s": "-1"}, {"mode": "float"})
        assert spec.energy == 0.5
        assert spec.coeffs == (1.0, 2.5)
        assert spec.s == -1.0


class TestSerialization:
    def test_scalar_round_trip(self):
        x = ExactScalar.pi_term(Fraction(-10, 3), 2) + ExactScalar.pi_term(2, -1)
        doc = serialize_scalar(x)
        assert {"rational": "-10/3", "pi_half_power": 2} in doc
        assert parse_scalar(doc) == x

    def test_series_round_trip_exact(self):
        s = RadialSeries.exact(-3, (1, 0, Fraction(2, 7)))
        assert parse_series(serialize_series(s)) == s

    def test_series_round_trip_float_is_bit_identical(self):
        s = RadialSeries(-1.0, (1.0, 0.1, -2.718281828459045))
        doc = json.loads(json.dumps(serialize_series(s)))
        assert parse_series(doc) == s

    def test_expr_round_trip(self):
        pf = PseudoFunction(RadialSeries.exact(-3, (1, 2)), AngularLabel(1, -1))
        expr = laplacian(pf)
        doc = json.loads(json.dumps(serialize_expr(expr)))
        assert parse_expr(doc) == expr

    def test_verdict_round_trip(self):
        v = classify_solution(PotentialModel.zero(), 0, 0, Fraction(1), -1, 8)
        doc = json.loads(json.dumps(serialize_verdict(v)))
        assert parse_verdict(doc) == v

    def test_verdict_round_trip_obstruction(self):
        v = classify_solution(PotentialModel.coulomb(-2), 0, 0, Fraction(-1), -1, 8)
        doc = json.loads(json.dumps(serialize_verdict(v)))
        assert parse_verdict(doc) == v

    def test_delta_terms_emitted_in_sorted_order(self):
        expr = laplacian(
            PseudoFunction(RadialSeries.exact(-5, (1, 1, 1, 1)), AngularLabel(0, 0))
        )
        doc = serialize_expr(expr)
        keys = [(t["ell"], t["mu"], t["p"]) for t in doc["delta_terms"]]
        assert keys == sorted(keys)
        assert len(keys) == 2


class TestRun:
    def test_coeffs_table(self):
        code, report, doc = run("coeffs", ProblemSpec(order=3, ell=1))
        assert code == 0
        assert "-4*pi" in report and "3/5" in report
        assert len(doc["table"]) == 4

    def test_laplacian_requires_series(self):
        with pytest.raises(ConfigError):
            run("laplacian", ProblemSpec())

    def test_laplacian_payload(self):
        spec = ProblemSpec(s=-3, coeffs=(Fraction(1),))
        code, report, doc = run("laplacian", spec)
        assert code == 0
        assert doc["delta_terms"][0]["p"] == 1
        assert parse_expr(doc) is not None

    def test_solve_reports_obstruction_exit_2(self):
        spec = ProblemSpec(
            potential=PotentialModel.coulomb(-2), energy=Fraction(-1), root="both", order=6
        )
        code, report, doc = run("solve", spec)
        assert code == 2
        assert "logarithm" in report

    def test_classify_free_particle(self):
        spec = ProblemSpec(energy=Fraction(1), root="singular", order=8)
        code, report, doc = run("classify", spec)
        assert code == 0
        assert "2*sqrt(pi)" in report
        assert doc["verdict"]["kind"] == VerdictKind.SOLVES_MODIFIED_SE.value
        assert doc["citations"]

    def test_verify_specific_case(self):
        spec = ProblemSpec(s=-3, coeffs=(Fraction(1),))
        code, report, doc = run("verify", spec)
        assert code == 0
        assert doc["max_residual"] < 1e-8

    def test_verify_exit_3_on_impossible_tolerance(self):
        spec = ProblemSpec(s=-3, coeffs=(Fraction(1),), tol=1e-30)
        code, _report, _doc = run("verify", spec)
        assert code == 3

    def test_unknown_command(self):
        with pytest.raises(ValueError):
            run("nope", ProblemSpec())


class TestMain:
    def test_coeffs(self, capsys):
        assert main(["coeffs", "--order", "2"]) == 0
        out = capsys.readouterr().out
        assert "-10/3*pi" in out

    def test_config_file_and_json_output(self, tmp_path, capsys):
        cfg = tmp_path / "problem.cfg"
        cfg.write_text("s = -3\ncoeffs = 1\nell = 0\nmu = 0\n")
        out_json = tmp_path / "result.json"
        code = main(
            ["laplacian", "--config", str(cfg), "--verify", "--json", str(out_json)]
        )
        assert code == 0
        doc = json.loads(out_json.read_text())
        expr = parse_expr(doc)
        assert expr.delta_part == DeltaSum.build(
            [DeltaTerm(ExactScalar.pi_term(Fraction(-10, 3), 2), 0, 0, 1)]
        )
        assert doc["residuals"]

    def test_solve_hydrogen(self, tmp_path, capsys):
        cfg = tmp_path / "h.cfg"
        cfg.write_text("v[-1] = -2\nenergy = -1\n")
        assert main(["solve", "--config", str(cfg), "--root", "regular", "--order", "6"]) == 0
        out = capsys.readouterr().out
        assert "(-1/6) r^4" in out  # a_3 of the bound state

    def test_obstruction_exit_code(self, tmp_path, capsys):
        cfg = tmp_path / "h.cfg"
        cfg.write_text("v[-1] = -2\nenergy = -1\n")
        assert main(["solve", "--config", str(cfg), "--root", "singular"]) == 2

    def test_bad_config_exit_1(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("energy == oops\n")
        assert main(["classify", "--config", str(cfg)]) == 1
        assert "config error" in capsys.readouterr().err

    def test_missing_config_exit_1(self, capsys):
        assert main(["classify", "--config", "/nonexistent/x.cfg"]) == 1

    def test_usage_error_exit_1(self):
        with pytest.raises(SystemExit) as err:
            main(["classify", "--root", "sideways"])
        assert err.value.code == 1

    def test_verify_default_grid(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert "max residual" in out

    def test_float_mode_round_trip(self, tmp_path, capsys):
        cfg = tmp_path / "f.cfg"
        cfg.write_text("s = 2\ncoeffs = 0.1, -0.25\nell = 0\nmu = 0\nmode = float\n")
        out_json = tmp_path / "f.json"
        assert main(["laplacian", "--config", str(cfg), "--json", str(out_json)]) == 0
        doc = json.loads(out_json.read_text())
        expr = parse_expr(doc)
        assert not expr.pf_part.radial.is_exact
        assert expr.pf_part.radial.coeffs == (6 * 0.1, 12 * -0.25)
