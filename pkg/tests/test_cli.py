"""End-to-end tests of the command-line surface and its exit-code contract."""

import csv
import io
import math

import pytest

from kuiperpair.cli import format_number, main, render_table, round_half_away, TableSpec
from kuiperpair.quantile import TestKind, kuiper_ltq, kuiper_utq
from reference_tables import VN_PAIRS, VNN_PAIRS


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFormatting:
    def test_half_away_from_zero(self):
        assert round_half_away(0.00005, 4) == 0.0001
        assert round_half_away(-0.00005, 4) == -0.0001
        assert round_half_away(1.23445, 4) == 1.2345
        assert round_half_away(2.5, 0) == 3.0

    def test_format_number(self):
        assert format_number(1.67581564, 4) == "1.6758"
        assert format_number(0.0, 4) == "0.0000"
        assert format_number(-1e-9, 4) == "0.0000"
        assert format_number(0.30596, 2) == "0.31"


class TestPairCommand:
    def test_one_sample_reference(self, capsys):
        code, out, err = run_cli(capsys, "pair", "--alpha", "0.05", "--n", "30")
        assert code == 0
        assert out == "c=1.6758 v=0.3060\n"

    def test_two_sample_reference(self, capsys):
        code, out, _ = run_cli(
            capsys, "pair", "--alpha", "0.05", "--n", "30", "--test", "vnn"
        )
        assert code == 0
        assert out == "c=2.4430 v=0.4460\n"

    def test_extreme_alpha_at_infinity(self, capsys):
        code, out, _ = run_cli(capsys, "pair", "--alpha", "1e-10", "--n", "inf")
        assert code == 0
        assert out.startswith("c=3.7226")
        assert out.endswith("v=0.0000\n")

    def test_direct_method_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "pair", "--alpha", "0.05", "--n", "30",
            "--method", "direct", "--guess", "1.5",
        )
        assert code == 0
        assert out == "c=1.6758 v=0.3060\n"

    def test_decimals_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "pair", "--alpha", "0.05", "--n", "30", "--decimals", "6"
        )
        assert code == 0
        assert out == "c=1.675816 v=0.305961\n"

    def test_solver_error_exits_one(self, capsys):
        code, out, err = run_cli(capsys, "pair", "--alpha", "0.05", "--n", "5")
        assert code == 1
        assert "NumericalDomainError" in err
        assert out == ""

    @pytest.mark.parametrize(
        "argv",
        [
            ("pair", "--alpha", "1.5", "--n", "30"),
            ("pair", "--alpha", "0.05", "--n", "0"),
            ("pair", "--alpha", "0.05", "--n", "ten"),
            ("pair", "--alpha", "0.05"),
        ],
    )
    def test_usage_errors_exit_two(self, capsys, argv):
        code, _, _ = run_cli(capsys, *argv)
        assert code == 2

    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run_cli(capsys, "pair", "--alpha", "0.01", "--n", "30")
        _, second, _ = run_cli(capsys, "pair", "--alpha", "0.01", "--n", "30")
        assert first == second


class TestTableCommand:
    def test_csv_long_form_round_trip(self, capsys):
        code, out, err = run_cli(
            capsys, "table",
            "--alphas", "0.10,0.05,0.01", "--ns", "10,20,30", "--test", "vn",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r.strip() for r in out.splitlines()[0].split(",")] == ["alpha", "n", "c", "v"]
        assert len(rows) == 9
        parsed = {
            (float(row["alpha"]), int(row["n"])): (float(row["c"]), float(row["v"]))
            for row in rows
        }
        assert parsed[(0.05, 30)] == (1.6758, 0.3060)
        assert parsed[(0.01, 30)] == (1.9252, 0.3515)

    def test_markdown_single_cell(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--alphas", "0.10", "--ns", "inf",
            "--format", "markdown",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "| alpha | n=inf |"
        assert "(1.6196, 0.0000)" in lines[2]

    def test_vnn_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--alphas", "0.05", "--ns", "30", "--test", "vnn"
        )
        assert code == 0
        assert "0.05,30,2.4430,0.4460" in out

    def test_full_one_sample_reference_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "table",
            "--alphas", "0.10,0.05,0.01",
            "--ns", "10,20,30,40,100,180,1000000",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 21
        for row in rows:
            key = (float(row["alpha"]), int(row["n"]))
            c_ref, v_ref = VN_PAIRS[key]
            assert abs(float(row["c"]) - c_ref) <= 5e-4, key
            assert abs(float(row["v"]) - v_ref) <= 5e-4, key

    def test_full_two_sample_reference_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "table",
            "--alphas", "0.01,0.02,0.03,0.04,0.05,0.06,0.07,0.08,0.09,0.10",
            "--ns", "10,20,30,40,100,inf", "--test", "vnn",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 60
        for row in rows:
            # The published limit column was tabulated at n = 1e8; the exact
            # limit lands within the same tolerance.
            n_key = 10**8 if row["n"] == "inf" else int(row["n"])
            c_ref, v_ref = VNN_PAIRS[(float(row["alpha"]), n_key)]
            assert abs(float(row["c"]) - c_ref) <= 5e-4, row
            if row["n"] != "inf":
                assert abs(float(row["v"]) - v_ref) <= 5e-4, row

    def test_unsolvable_cell_renders_na_and_exits_one(self, capsys):
        code, out, err = run_cli(
            capsys, "table", "--alphas", "0.05", "--ns", "5,30"
        )
        assert code == 1
        assert "0.05,5,NA,NA" in out
        assert "0.05,30,1.6758,0.3060" in out
        assert "unsolvable" in err
        assert "NumericalDomainError" in err

    def test_decimals_out_of_range_exits_two(self, capsys):
        code, _, _ = run_cli(
            capsys, "table", "--alphas", "0.05", "--ns", "30", "--decimals", "13"
        )
        assert code == 2

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            TableSpec(alphas=(), ns=(30,), kind=TestKind.ONE_SAMPLE)
        with pytest.raises(ValueError):
            TableSpec(alphas=(0.05,), ns=(30,), kind=TestKind.ONE_SAMPLE, format="html")

    def test_render_table_reports_failures(self):
        spec = TableSpec(alphas=(0.05,), ns=(5,), kind=TestKind.ONE_SAMPLE)
        text, failures = render_table(spec)
        assert "NA,NA" in text
        assert len(failures) == 1


class TestQuantileCommands:
    def test_utq(self, capsys):
        code, out, _ = run_cli(capsys, "utq", "--alpha", "0.05", "--n", "30")
        assert code == 0 and out == "0.3060\n"

    def test_utq_guard(self, capsys):
        code, out, _ = run_cli(capsys, "utq", "--alpha", "0.99995", "--n", "17")
        assert code == 0 and out == "0.0000\n"

    def test_ltq(self, capsys):
        code, out, _ = run_cli(capsys, "ltq", "--alpha", "0.95", "--n", "30")
        assert code == 0 and out == "0.3060\n"

    def test_ltq_guard(self, capsys):
        code, out, _ = run_cli(capsys, "ltq", "--alpha", "0.00005", "--n", "30")
        assert code == 0 and out == "0.0000\n"

    def test_invcdf(self, capsys):
        code, out, _ = run_cli(capsys, "invcdf", "--p", "0.90", "--n", "100")
        assert code == 0 and out == "0.1584\n"

    def test_invcdf_p_one_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "invcdf", "--p", "1.0", "--n", "30")
        assert code == 1
        assert "UnboundedQuantileError" in err


class TestCurveCommand:
    def test_contains_reference_row(self, capsys):
        code, out, _ = run_cli(capsys, "curve", "--n", "30", "--points", "4999")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p,x"
        assert len(lines) == 5000
        target = [line for line in lines if line.startswith("0.95,")]
        assert target == ["0.95,0.3060"]

    def test_delegation_identity_at_half(self, capsys):
        code, out, _ = run_cli(capsys, "curve", "--n", "30", "--points", "4999")
        row = [line for line in out.splitlines() if line.startswith("0.5,")][0]
        assert float(row.split(",")[1]) == pytest.approx(kuiper_ltq(0.5, 30), abs=5e-5)

    def test_steeper_cdf_at_larger_n(self, capsys):
        _, out_small, _ = run_cli(capsys, "curve", "--n", "10", "--points", "4999")
        _, out_large, _ = run_cli(capsys, "curve", "--n", "1000", "--points", "4999")
        row = lambda text: [l for l in text.splitlines() if l.startswith("0.95,")][0]
        x_small = float(row(out_small).split(",")[1])
        x_large = float(row(out_large).split(",")[1])
        assert x_large < x_small

    def test_unsolvable_cells_render_na(self, capsys):
        # n = 5 sits outside the hard-coded solve guess's evaluable region.
        code, out, _ = run_cli(capsys, "curve", "--n", "5", "--points", "3")
        assert code == 0
        assert out.splitlines()[1:] == ["0.0002,NA", "0.5,NA", "0.9998,NA"]

    def test_too_few_points_exits_two(self, capsys):
        code, _, _ = run_cli(capsys, "curve", "--n", "30", "--points", "1")
        assert code == 2


class TestTestCommand:
    @staticmethod
    def _write(tmp_path, name, values, header_comment=True):
        lines = ["# generated test data", ""] if header_comment else []
        lines += [repr(v) for v in values]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)

    def test_clustered_data_rejected(self, tmp_path, capsys):
        # 30 values crammed into [0, 0.25] stray far from uniform.
        values = [0.25 * (i + 1) / 30 for i in range(30)]
        path = self._write(tmp_path, "clustered.txt", values)
        code, out, _ = run_cli(
            capsys, "test", "--data", path, "--alpha", "0.05", "--pit"
        )
        assert code == 3
        assert "decision=REJECT" in out
        assert "v_alpha=0.3060" in out

    def test_evenly_spread_data_accepted(self, tmp_path, capsys):
        values = [(i + 1) / 31 for i in range(30)]
        path = self._write(tmp_path, "spread.txt", values)
        code, out, _ = run_cli(
            capsys, "test", "--data", path, "--alpha", "0.05", "--pit"
        )
        assert code == 0
        assert "decision=ACCEPT" in out
        assert "p_value=" in out

    def test_uniform_distribution_transform(self, tmp_path, capsys):
        values = [10.0 + 80.0 * (i + 1) / 21 for i in range(20)]
        path = self._write(tmp_path, "uniform.txt", values)
        code, out, _ = run_cli(
            capsys, "test", "--data", path, "--alpha", "0.05",
            "--dist", "uniform", "--params", "10", "90",
        )
        assert code == 0
        assert "decision=ACCEPT" in out

    def test_normal_distribution_transform(self, tmp_path, capsys):
        values = [-1.6, -1.1, -0.7, -0.4, -0.2, 0.0, 0.2, 0.4, 0.7, 1.1, 1.6]
        path = self._write(tmp_path, "normal.txt", values)
        code, out, _ = run_cli(
            capsys, "test", "--data", path, "--alpha", "0.05",
            "--dist", "normal", "--params", "0", "1",
        )
        assert code == 0
        assert "decision=ACCEPT" in out

    def test_pit_out_of_range_exits_two(self, tmp_path, capsys):
        path = self._write(tmp_path, "bad.txt", [0.2, 0.5, 1.5])
        code, _, err = run_cli(
            capsys, "test", "--data", path, "--alpha", "0.05", "--pit"
        )
        assert code == 2
        assert "OutOfRange" in err

    def test_malformed_line_exits_two(self, tmp_path, capsys):
        path = tmp_path / "malformed.txt"
        path.write_text("0.5\nnot-a-number\n", encoding="utf-8")
        code, _, err = run_cli(
            capsys, "test", "--data", str(path), "--alpha", "0.05", "--pit"
        )
        assert code == 2
        assert "not a decimal number" in err

    def test_non_finite_value_exits_two(self, tmp_path, capsys):
        path = tmp_path / "nonfinite.txt"
        path.write_text("0.5\nnan\n0.7\n", encoding="utf-8")
        code, _, err = run_cli(
            capsys, "test", "--data", str(path), "--alpha", "0.05", "--pit"
        )
        assert code == 2
        assert "non-finite" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run_cli(
            capsys, "test", "--data", "/nonexistent/file.txt", "--alpha", "0.05"
        )
        assert code == 2

    def test_empty_file_exits_two(self, tmp_path, capsys):
        path = tmp_path / "empty.txt"
        path.write_text("# only a comment\n\n", encoding="utf-8")
        code, _, err = run_cli(
            capsys, "test", "--data", str(path), "--alpha", "0.05", "--pit"
        )
        assert code == 2

    def test_report_fields_present(self, tmp_path, capsys):
        values = [(i + 1) / 11 for i in range(10)]
        path = self._write(tmp_path, "fields.txt", values)
        _, out, _ = run_cli(capsys, "test", "--data", path, "--alpha", "0.05", "--pit")
        for key in ("n=", "d_plus=", "d_minus=", "v=", "k=", "v_alpha=", "p_value=", "decision="):
            assert key in out


class TestSimulateCommand:
    def test_matches_target(self, capsys):
        code, out, _ = run_cli(
            capsys, "simulate", "--n", "30", "--alpha", "0.05",
            "--reps", "20000", "--seed", "42",
        )
        assert code == 0
        fields = dict(part.split("=") for part in out.split())
        assert fields["reps"] == "20000"
        assert fields["seed"] == "42"
        assert fields["target"] == "0.05"
        assert 0.04 <= float(fields["empirical"]) <= 0.06

    def test_single_replication(self, capsys):
        code, out, _ = run_cli(
            capsys, "simulate", "--n", "10", "--alpha", "0.05",
            "--reps", "1", "--seed", "9",
        )
        assert code == 0
        fields = dict(part.split("=") for part in out.split())
        assert float(fields["empirical"]) in (0.0, 1.0)

    def test_deterministic(self, capsys):
        args = ("simulate", "--n", "20", "--alpha", "0.10", "--reps", "5000", "--seed", "11")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_zero_reps_exits_two(self, capsys):
        code, _, _ = run_cli(
            capsys, "simulate", "--n", "30", "--alpha", "0.05",
            "--reps", "0", "--seed", "1",
        )
        assert code == 2

    def test_infinite_n_rejected(self, capsys):
        code, _, _ = run_cli(
            capsys, "simulate", "--n", "inf", "--alpha", "0.05",
            "--reps", "10", "--seed", "1",
        )
        assert code == 2
