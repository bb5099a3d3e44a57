"""CLI contract tests: determinism, schemas, exit codes, golden output."""

import csv
import io
import json
import math
from pathlib import Path

import pytest

from qhydrogen.cli import main
from qhydrogen.qnum import DeformationParameter, SpinLabel
from qhydrogen.spectrum import energy, level_table

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("levels", "--q", "2", "--j-max", "2"),
            ("levels", "--q", "1.3", "--j-max", "5", "--format", "json"),
            ("levels", "--q", "0.8", "--j-max", "4", "--format", "table"),
            ("lines", "--q", "2"),
            ("states", "--j", "3"),
            ("scan", "--j", "2", "--s-values", "0,0.1,0.2"),
            ("verify", "--q", "1.1", "--j-max", "6"),
            ("dump-irrep", "--j", "2", "--q", "2", "--operator", "iplus"),
        ],
    )
    def test_repeat_invocations_byte_identical(self, capsys, args):
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1.endswith("\n")


class TestGoldenFiles:
    def test_levels_q2_jmax2(self, capsys):
        code, out, _ = run_cli(capsys, "levels", "--q", "2", "--j-max", "2")
        assert code == 0
        assert out == (GOLDEN / "levels_q2_jmax2.csv").read_text()
        # independent anchor values, not just self-agreement
        rows = list(csv.DictReader(io.StringIO(out)))
        by_key = {(r["twice_j"], r["twice_abs_m"]): r for r in rows}
        assert by_key[("2", "2")]["energy"] == "-0.1"
        assert by_key[("2", "0")]["energy"] == "-0.0909090909090909"
        assert by_key[("0", "0")]["multiplicity"] == "1"
        assert by_key[("1", "1")]["multiplicity"] == "4"

    def test_lines_q2_lyman_analog(self, capsys):
        code, out, _ = run_cli(capsys, "lines", "--q", "2")
        assert code == 0
        assert out == (GOLDEN / "lines_q2.csv").read_text()
        deltas = [r["delta_energy"] for r in csv.DictReader(io.StringIO(out))]
        assert deltas[:3] == ["0.75", "0.9", "0.909090909090909"]


class TestLevelsCommand:
    def test_csv_columns_exact(self, capsys):
        _, out, _ = run_cli(capsys, "levels", "--q", "1.5", "--j-max", "3")
        header = out.splitlines()[0]
        assert header == "twice_j,twice_abs_m,n,energy,unit,multiplicity"

    def test_undeformed_bohr(self, capsys):
        # --j-max is in exact twice-j form, so 2 spans n = 1..3
        code, out, _ = run_cli(capsys, "levels", "--q", "1", "--j-max", "2",
                               "--mode", "undeformed")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [(r["n"], r["energy"], r["multiplicity"]) for r in rows] == [
            ("1", "-1", "1"),
            ("2", "-0.25", "4"),
            ("3", "-0.111111111111111", "9"),
        ]
        _, out1, _ = run_cli(capsys, "levels", "--q", "1", "--j-max", "1",
                             "--mode", "undeformed")
        assert len(out1.splitlines()) == 3  # header + n = 1, 2

    def test_modes_agree_on_distinct_energies_at_q1(self, capsys):
        for tj_max in ("2", "5", "8"):
            _, out_d, _ = run_cli(capsys, "levels", "--q", "1", "--j-max", tj_max,
                                  "--mode", "deformed")
            _, out_u, _ = run_cli(capsys, "levels", "--q", "1", "--j-max", tj_max,
                                  "--mode", "undeformed")
            deformed = {r["energy"] for r in csv.DictReader(io.StringIO(out_d))}
            undeformed = {r["energy"] for r in csv.DictReader(io.StringIO(out_u))}
            assert deformed == undeformed

    def test_ev_units(self, capsys):
        _, out, _ = run_cli(capsys, "levels", "--q", "1", "--j-max", "0", "--units", "ev")
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["unit"] == "ev"
        assert float(row["energy"]) == pytest.approx(-13.605693122994)

    def test_s_flag_equivalent_to_q(self, capsys):
        _, out_q, _ = run_cli(capsys, "levels", "--q", "2", "--j-max", "2")
        _, out_s, _ = run_cli(capsys, "levels", "--s", str(math.log(2.0)), "--j-max", "2")
        assert out_q == out_s

    def test_json_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "levels", "--q", "1.7", "--j-max", "4",
                            "--format", "json")
        doc = json.loads(out)
        assert doc["config"]["command"] == "levels"
        table = level_table(SpinLabel(4), DeformationParameter(1.7), "deformed")
        assert len(doc["rows"]) == len(table)
        for row, lv in zip(doc["rows"], table):
            assert row["twice_j"] == lv.j.twice_j
            assert row["twice_abs_m"] == lv.twice_abs_m
            # the printed 15-digit value re-parses to the printed precision
            assert float(row["energy"]) == float(f"{lv.energy_ry:.15g}")

    def test_output_file_matches_stdout(self, capsys, tmp_path):
        target = tmp_path / "levels.csv"
        code, _, _ = run_cli(capsys, "levels", "--q", "2", "--j-max", "2",
                             "--output", str(target))
        assert code == 0
        _, out, _ = run_cli(capsys, "levels", "--q", "2", "--j-max", "2")
        assert target.read_text() == out


class TestStatesCommand:
    def test_deformed_count_and_order(self, capsys):
        _, out, _ = run_cli(capsys, "states", "--j", "2")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [(r["twice_m"], r["twice_p"]) for r in rows] == [
            ("2", "2"), ("2", "-2"), ("0", "0"), ("-2", "2"), ("-2", "-2")
        ]

    def test_undeformed_count(self, capsys):
        _, out, _ = run_cli(capsys, "states", "--j", "2", "--mode", "undeformed")
        assert len(list(csv.DictReader(io.StringIO(out)))) == 9

    def test_table_renders_fractions(self, capsys):
        _, out, _ = run_cli(capsys, "states", "--j", "3", "--format", "table")
        assert "3/2" in out
        assert "-1/2" in out


class TestScanCommand:
    def test_csv_schema(self, capsys):
        _, out, _ = run_cli(capsys, "scan", "--j", "2", "--s-values", "0,0.5")
        lines_ = out.splitlines()
        assert lines_[0] == "s,q,twice_j,twice_abs_m,energy_ry,deviation_ry,flag"
        assert lines_[1] == "0,1,2,0,-0.111111111111111,0,"

    def test_flagged_rows_have_empty_numbers(self, capsys):
        code, out, _ = run_cli(capsys, "scan", "--j", "2", "--s-values", "750")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert all(r["flag"] == "overflow" and r["energy_ry"] == "" for r in rows)

    def test_grid_options(self, capsys):
        _, out, _ = run_cli(capsys, "scan", "--j", "1", "--s-min", "0",
                            "--s-max", "0.2", "--s-count", "3")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["s"] for r in rows] == ["0", "0.1", "0.2"]

    def test_bad_s_values_is_validation_error(self, capsys):
        code, _, err = run_cli(capsys, "scan", "--j", "1", "--s-values", "a,b")
        assert code == 1
        assert "s-values" in err


class TestVerifyCommand:
    def test_passing_run(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--q", "1.3", "--j-max", "10")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 4 * 11  # three commutators + casimir per spin
        assert all(r["passed"] == "true" for r in rows)
        assert all(float(r["max_deviation"]) <= 1e-11 for r in rows)

    def test_failing_run_exits_2_but_emits_report(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--q", "5", "--j-max", "20",
                                 "--tolerance", "1e-30")
        assert code == 2
        assert "exceeded tolerance" in err
        rows = list(csv.DictReader(io.StringIO(out)))
        assert any(r["passed"] == "false" for r in rows)

    def test_bad_tolerance_is_validation_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--tolerance", "-1")
        assert code == 1


class TestDumpIrrep:
    def test_schema_and_values(self, capsys):
        code, out, _ = run_cli(capsys, "dump-irrep", "--j", "2", "--q", "2",
                               "--operator", "iplus")
        assert code == 0
        doc = json.loads(out)
        assert list(doc.keys()) == ["j_times_2", "q", "operator", "dim", "entries"]
        assert doc["j_times_2"] == 2 and doc["q"] == 2 and doc["dim"] == 3
        assert len(doc["entries"]) == 9
        value = doc["entries"][1]  # row 0, column 1: sqrt([2][1]) at q = 2
        assert value[0] == pytest.approx(math.sqrt(2.5), rel=1e-14)
        assert value[1] == 0

    def test_iz_is_real_descending(self, capsys):
        _, out, _ = run_cli(capsys, "dump-irrep", "--j", "3", "--q", "1.5",
                            "--operator", "iz")
        doc = json.loads(out)
        diagonal = [doc["entries"][k * 4 + k][0] for k in range(4)]
        assert diagonal == [1.5, 0.5, -0.5, -1.5]


class TestExitCodes:
    def test_success_is_zero(self, capsys):
        assert run_cli(capsys, "levels", "--q", "1", "--j-max", "2")[0] == 0

    def test_conflicting_q_and_s(self, capsys):
        code, _, err = run_cli(capsys, "levels", "--q", "2", "--s", "0.5")
        assert code == 1
        assert "mutually exclusive" in err

    def test_unknown_flag(self, capsys):
        assert run_cli(capsys, "levels", "--frobnicate")[0] == 1

    def test_malformed_twice_j(self, capsys):
        assert run_cli(capsys, "levels", "--j-max", "1.5")[0] == 1
        assert run_cli(capsys, "levels", "--j-max", "-2")[0] == 1
        assert run_cli(capsys, "states", "--j", "abc")[0] == 1

    def test_nonpositive_q(self, capsys):
        code, _, err = run_cli(capsys, "levels", "--q", "-2")
        assert code == 1
        assert "positive" in err

    def test_computational_overflow_is_2(self, capsys):
        code, _, err = run_cli(capsys, "levels", "--q", "1e300", "--j-max", "8")
        assert code == 2
        assert "overflow" in err.lower()

    def test_lines_j_max_below_lower_is_validation(self, capsys):
        code, _, _ = run_cli(capsys, "lines", "--lower-j", "4", "--j-max", "2")
        assert code == 1

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0
        assert run_cli(capsys, "levels", "--help")[0] == 0


class TestLinesCommand:
    def test_csv_schema(self, capsys):
        _, out, _ = run_cli(capsys, "lines", "--q", "1", "--j-max", "2")
        header = out.splitlines()[0]
        assert header == ("upper_twice_j,upper_twice_abs_m,lower_twice_j,"
                          "lower_twice_abs_m,delta_energy,unit,wavenumber_per_cm,"
                          "wavelength_nm")

    def test_undeformed_merges_split_levels(self, capsys):
        _, out, _ = run_cli(capsys, "lines", "--q", "1", "--j-max", "2")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["delta_energy"] for r in rows] == ["0.75", "0.888888888888889"]

    def test_balmer_lower_level(self, capsys):
        _, out, _ = run_cli(capsys, "lines", "--q", "1", "--lower-j", "1",
                            "--lower-m", "1", "--j-max", "4")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert float(rows[0]["delta_energy"]) == pytest.approx(0.25 - 1.0 / 9.0, rel=1e-13)

    def test_wavelength_wavenumber_identity(self, capsys):
        _, out, _ = run_cli(capsys, "lines", "--q", "1.4", "--j-max", "6")
        for r in csv.DictReader(io.StringIO(out)):
            product = float(r["wavelength_nm"]) * float(r["wavenumber_per_cm"])
            assert product == pytest.approx(1e7, rel=1e-10)

    def test_empty_series(self, capsys):
        code, out, _ = run_cli(capsys, "lines", "--q", "2", "--j-max", "0")
        assert code == 0
        assert out.splitlines()[1:] == []
