"""Regenerate the golden values in tests/golden/ from the catalog."""

import argparse
from pathlib import Path

from tmsverify.catalog import FormulaArgs, FormulaId, get_formula
from tmsverify.cli.main import parse_genus_range

GOLDEN_DIR = Path(__file__).resolve().parents[1] / "tests" / "golden"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--genus", type=parse_genus_range, default=(2, 3), metavar="A..B")
    args = parser.parse_args()
    low, high = args.genus

    for formula_id in FormulaId:
        formula = get_formula(formula_id)
        if not formula.is_polynomial:
            continue
        lines = [f"{g}\t{formula(FormulaArgs(genus=g))}" for g in range(low, high + 1)]
        path = GOLDEN_DIR / f"{formula_id.value}.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path.relative_to(GOLDEN_DIR.parents[1])}")


if __name__ == "__main__":
    main()
