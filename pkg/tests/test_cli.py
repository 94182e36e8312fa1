import json

import pytest

from psdmat.acceptance import OPTIMAL_7X7
from psdmat.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_profile_of_file(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        path.write_text(OPTIMAL_7X7.to_text())
        code, out, _ = run_cli(capsys, "analyze", str(path))
        assert code == 0
        assert "d1: 19" in out

    def test_record_format_field_names(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        path.write_text(OPTIMAL_7X7.to_text())
        code, out, _ = run_cli(capsys, "analyze", str(path), "--format", "record")
        assert code == 0
        record = json.loads(out)
        assert record["peak"] == 32
        assert record["sidelobe"] == 13
        assert record["d1"] == 19
        assert {"distance", "count"} == set(record["histogram"][0])

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "/nonexistent/m.txt")
        assert code == 3
        assert "error" in err

    def test_parse_error_reports_line(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("2 2\n01\n0x\n")
        code, _, err = run_cli(capsys, "analyze", str(path))
        assert code == 3
        assert "line 3" in err


class TestConstruct:
    def test_paley7(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--family", "paley-a", "--p", "7")
        assert code == 0
        assert "7: 0,1,2,4" in out
        assert "near-s-optimal" in out

    def test_record(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "--family", "z4p", "--p", "3", "--format", "record"
        )
        assert code == 0
        record = json.loads(out)
        assert record["design"] == "(12,7,3,2)-ADS"
        assert record["verified"] is True

    def test_bad_parameter(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--family", "paley-a", "--p", "13")
        assert code == 3
        assert "3 mod 4" in err


class TestBuild:
    def test_reports_mismatch_exit_code(self, capsys):
        code, out, _ = run_cli(capsys, "build", "--family", "qnr", "--p", "5")
        assert code == 1  # predicted and measured distances disagree
        assert "predicted d1: 18" in out
        assert "measured d1: 16" in out
        assert "verified: False" in out

    def test_record_contains_matrix(self, capsys):
        code, out, _ = run_cli(
            capsys, "build", "--family", "qnr", "--p", "5", "--format", "record"
        )
        record = json.loads(out)
        assert record["matrix"].startswith("7 7\n")
        assert record["unit_shift_distance"] == 16


class TestSearch:
    def test_small_space(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "--rows", "2", "--cols", "3", "--format", "record"
        )
        assert code == 0
        record = json.loads(out)
        assert record["explored"] == 63
        assert record["best_profile"]["d1"] >= 1

    def test_budget_rejected(self, capsys):
        code, _, err = run_cli(capsys, "search", "--rows", "6", "--cols", "6")
        assert code == 3
        assert "budget" in err


class TestBound:
    def test_modulus_bounds(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--v", "13")
        assert code == 0
        assert "B_13 = 3" in out
        assert "special bound = 43" in out

    def test_dimension_bound(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--rows", "7", "--cols", "7", "--ones", "32"
        )
        assert code == 0
        assert "24" in out

    def test_incomplete_arguments(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--rows", "7")
        assert code == 3


class TestSetCommands:
    def test_classify(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--set", "7: 0,1,2,4")
        assert code == 0
        assert "(7,4,2)-DS" in out

    def test_spectrum(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--set", "5: 2,3", "--format", "record"
        )
        record = json.loads(out)
        assert record["lambda"] == 1
        assert record["periodic_distance"] == 1
        assert record["multiplicity"]["1"] == 1

    def test_soptimality(self, capsys):
        code, out, _ = run_cli(capsys, "soptimality", "--set", "13: 0,1,3,4,9,10,12")
        assert code == 0
        assert "s-optimal" in out

    def test_soptimality_rejects_non_special(self, capsys):
        code, _, err = run_cli(capsys, "soptimality", "--set", "5: 0,2")
        assert code == 3
        assert "not special" in err


class TestCyclotomy:
    def test_classes_and_numbers(self, capsys):
        code, out, _ = run_cli(
            capsys, "cyclotomy", "--p", "13", "--e", "4", "--format", "record"
        )
        record = json.loads(out)
        assert record["gamma"] == 2
        assert record["classes"][0] == [1, 3, 9]
        assert sum(sum(row) for row in record["numbers"]) == 11


class TestTablesAndSelftest:
    def test_tables_exit_code_flags_mismatches(self, capsys):
        code, out, _ = run_cli(capsys, "tables")
        assert code == 1
        assert "MISMATCH" in out

    def test_selftest_single_green_criterion(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--only", "5")
        assert code == 0
        assert "PASS" in out

    def test_selftest_single_red_criterion(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--only", "1", "--verbose")
        assert code == 1
        assert "FAIL" in out


class TestUsage:
    def test_unknown_verb(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bound", "--nonsense"])
        assert exc.value.code == 2
