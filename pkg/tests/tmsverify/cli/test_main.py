"""Tests for the command line."""

import json
from pathlib import Path

import pytest

from tmsverify.cli.main import main, parse_genus_range


def test_parse_genus_range() -> None:
    """Test A..B and single-genus forms."""
    assert parse_genus_range("2..8") == (2, 8)
    assert parse_genus_range("5") == (5, 5)


def test_show_polynomial(capsys: pytest.CaptureFixture[str]) -> None:
    """Test show prints the canonical polynomial."""
    assert main(["show", "ie_dol_sl2_kappa", "--genus", "2"]) == 0
    assert capsys.readouterr().out.strip() == "u^4 v^4 + u^3 v^3"


def test_show_integers(capsys: pytest.CaptureFixture[str]) -> None:
    """Test integer-valued formulas."""
    assert main(["show", "fermionic_shift", "--genus", "4"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main(["show", "total_dimension", "--genus", "3", "--r", "2"]) == 0
    assert capsys.readouterr().out.strip() == "12"
    assert main(["show", "fermionic_shift", "--genus", "4", "--trivial"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_show_json_with_provenance(capsys: pytest.CaptureFixture[str]) -> None:
    """Test show --format json."""
    assert main(["show", "ie_betti_sl2_kappa", "--genus", "2", "--format", "json", "--show-provenance"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["formula"] == "ie_betti_sl2_kappa"
    assert payload["genus"] == 2
    assert payload["value"] == "u^4 v^4 + u^2 v^2"
    assert payload["provenance"]


def test_show_unknown_formula(capsys: pytest.CaptureFixture[str]) -> None:
    """Test an unknown formula is a usage error listing the known ones."""
    assert main(["show", "ie_dol_sl3_kappa", "--genus", "2"]) == 2
    err = capsys.readouterr().err
    assert "unknown formula 'ie_dol_sl3_kappa'" in err
    assert "ie_dol_sl2_kappa" in err


def test_show_low_genus(capsys: pytest.CaptureFixture[str]) -> None:
    """Test show refuses g < 2."""
    assert main(["show", "ie_dol_sl2_kappa", "--genus", "1"]) == 2
    assert "genus must be ≥ 2 (got 1)" in capsys.readouterr().err


def test_show_low_rank(capsys: pytest.CaptureFixture[str]) -> None:
    """Test show refuses --r below 2 as a usage error."""
    assert main(["show", "total_dimension", "--genus", "3", "--r", "1"]) == 2
    assert "--r must be ≥ 2 (got 1)" in capsys.readouterr().err


def test_verify_low_genus(capsys: pytest.CaptureFixture[str]) -> None:
    """Test verify --genus 1..3 exits 2 before running anything."""
    assert main(["verify", "--genus", "1..3"]) == 2
    captured = capsys.readouterr()
    assert "genus must be ≥ 2" in captured.err
    assert captured.out == ""


def test_verify_table(capsys: pytest.CaptureFixture[str]) -> None:
    """Test verify prints a header and one PASS line per cell."""
    code = main(["verify", "--genus", "2..6", "--checks", "tms-kappa,perverse-kappa", "--show-provenance"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("# 15 reports (genus 2..6, mode closed_form, checks tms-kappa,perverse-kappa)")
    assert out.count("PASS [ok]") == 15
    assert "provenance:" in out


def test_verify_enumerate(capsys: pytest.CaptureFixture[str]) -> None:
    """Test enumerate mode through the command line."""
    assert main(["verify", "--genus", "2..4", "--checks", "tms-total", "--mode", "enumerate"]) == 0
    assert "note: stringy: enumerate agrees with closed_form" in capsys.readouterr().out


def test_verify_unknown_check(capsys: pytest.CaptureFixture[str]) -> None:
    """Test an unknown check name exits 2."""
    assert main(["verify", "--checks", "tms-kappa,bogus"]) == 2
    assert "unknown check 'bogus'" in capsys.readouterr().err


def test_verify_empty_checks(capsys: pytest.CaptureFixture[str]) -> None:
    """Test --checks with no names exits 2 instead of running every check."""
    assert main(["verify", "--genus", "2", "--checks", ","]) == 2
    captured = capsys.readouterr()
    assert "no checks selected" in captured.err
    assert captured.out == ""


def test_verify_bound_exceeded_json(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the JSON error envelope for an enumeration above the bound."""
    code = main(["verify", "--genus", "2..13", "--mode", "enumerate", "--format", "json"])
    assert code == 2
    envelope = json.loads(capsys.readouterr().out)
    assert envelope["error"]["code"] == "ENUMERATION_BOUND_EXCEEDED"
    assert envelope["error"]["details"] == {"requested": 26, "bound": 24}
    assert envelope["run_id"]


def test_verify_json_reports(capsys: pytest.CaptureFixture[str]) -> None:
    """Test JSON reports go to stdout and the header to stderr."""
    assert main(["verify", "--genus", "3", "--checks", "ordinary-failure", "--format", "json"]) == 0
    captured = capsys.readouterr()
    (report,) = json.loads(captured.out)
    assert report["identity"] == "ordinary-failure"
    assert report["difference"] == "u^4 v^4"
    assert report["passed"] is True
    assert "# 1 reports" in captured.err


def test_sweep_json_is_byte_stable(capsys: pytest.CaptureFixture[str]) -> None:
    """Test --no-timing output is identical across runs."""
    argv = ["sweep", "--genus", "2..4", "--format", "json", "--no-timing"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert all(report["elapsed_ms"] == 0.0 for report in json.loads(first))


def test_sweep_table_marks_observed_failure(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the RHL κ-piece failure shows as observed and the run still exits 0."""
    assert main(["sweep", "--genus", "2..3", "--checks", "rhl-kappa,tms-kappa", "--sides", "betti"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == [
        "genus", "identity", "side", "passed", "verdict", "terms", "max_deg", "elapsed_ms"
    ]
    assert len(lines) == 5
    rhl_rows = [line.split() for line in lines if "rhl-kappa" in line]
    assert [row[3:5] for row in rhl_rows] == [["FAIL", "observed"], ["FAIL", "observed"]]
    tms_rows = [line.split() for line in lines if "tms-kappa" in line]
    assert [row[3:5] for row in tms_rows] == [["PASS", "ok"], ["PASS", "ok"]]


def test_sweep_table_shows_raw_outcome(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the ordinary-failure row reports its raw PASS next to the verdict."""
    assert main(["sweep", "--genus", "3", "--checks", "ordinary-failure", "--no-timing"]) == 0
    (row,) = capsys.readouterr().out.splitlines()[1:]
    assert row.split() == ["3", "ordinary-failure", "-", "PASS", "ok", "2", "16", "0.000"]


def test_config_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test --config supplies the genus range and checks."""
    config = tmp_path / "run.env"
    config.write_text("TMSVERIFY_GENUS_MIN=3\nTMSVERIFY_GENUS_MAX=3\nTMSVERIFY_CHECKS=fermionic-shift\n")
    assert main(["--config", str(config), "verify"]) == 0
    assert capsys.readouterr().out.startswith("# 2 reports (genus 3..3")


def test_invalid_config_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test a config file with an unknown key exits 2."""
    config = tmp_path / "run.env"
    config.write_text("TMSVERIFY_GENUS=3\n")
    assert main(["--config", str(config), "verify"]) == 2
    assert "invalid configuration" in capsys.readouterr().err


def test_enumerate_bound_out_of_range(capsys: pytest.CaptureFixture[str]) -> None:
    """Test --enumerate-bound above the hard ceiling exits 2."""
    assert main(["verify", "--genus", "2", "--enumerate-bound", "34"]) == 2
    assert "invalid --enumerate-bound 34" in capsys.readouterr().err
    assert main(["verify", "--genus", "2", "--checks", "fermionic-shift", "--enumerate-bound", "32"]) == 0


def test_enumerate_bound_raised(capsys: pytest.CaptureFixture[str]) -> None:
    """Test a lower bound refuses enumerate mode that the default would allow."""
    argv = ["verify", "--genus", "2..3", "--checks", "tms-total", "--mode", "enumerate", "--enumerate-bound", "4"]
    assert main(argv) == 2
    assert "2g = 6" in capsys.readouterr().err


def test_bad_genus_syntax() -> None:
    """Test argparse rejects malformed ranges."""
    with pytest.raises(SystemExit) as exc_info:
        main(["verify", "--genus", "two"])
    assert exc_info.value.code == 2
