"""Regression tests against the canonical golden values in tests/golden/."""

from pathlib import Path

import pytest

from tmsverify.algebra import parse
from tmsverify.catalog import FormulaArgs, FormulaId, get_formula

GOLDEN_DIR = Path(__file__).resolve().parents[1] / "golden"


def _golden_cases() -> list[tuple[str, int, str]]:
    cases: list[tuple[str, int, str]] = []
    for path in sorted(GOLDEN_DIR.glob("*.txt")):
        for line in path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                genus, value = line.split("\t", 1)
                cases.append((path.stem, int(genus), value))
    return cases


def test_golden_files_exist() -> None:
    """Test every polynomial formula has golden values."""
    polynomial_ids = {f.value for f in FormulaId if get_formula(f).is_polynomial}
    assert {path.stem for path in GOLDEN_DIR.glob("*.txt")} == polynomial_ids


@pytest.mark.parametrize(("formula_id", "genus", "expected"), _golden_cases())
def test_catalog_matches_golden(formula_id: str, genus: int, expected: str) -> None:
    """Test the catalog reproduces the golden text byte for byte."""
    value = get_formula(formula_id)(FormulaArgs(genus=genus))
    assert str(value) == expected
    assert parse(expected) == value
