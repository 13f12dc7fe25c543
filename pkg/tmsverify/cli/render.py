"""Table and JSON rendering of sweep results and catalog values."""

import json
from typing import Any

from tmsverify.algebra.laurent import LaurentPoly
from tmsverify.algebra.text import pretty
from tmsverify.catalog.registry import Formula, FormulaArgs, FormulaValue
from tmsverify.orchestration.pipeline import CellResult
from tmsverify.schemas.enums import ShowFormat
from tmsverify.schemas.run_config import RunConfig

_SWEEP_COLUMNS = ("genus", "identity", "side", "passed", "verdict", "terms", "max_deg", "elapsed_ms")


def reports_json(results: list[CellResult]) -> str:
    payload = [result.report.model_dump(mode="json") for result in results]
    return json.dumps(payload, indent=2, ensure_ascii=False)


def verify_header(config: RunConfig, results: list[CellResult]) -> str:
    return (
        f"# {len(results)} reports (genus {config.genus_min}..{config.genus_max}, "
        f"mode {config.mode.value}, checks {','.join(c.value for c in config.checks)})"
    )


def verify_table(results: list[CellResult], show_provenance: bool) -> str:
    lines: list[str] = []
    for result in results:
        report = result.report
        side = report.side.value if report.side else "-"
        status = "PASS" if report.passed else "FAIL"
        lines.append(
            f"{status} [{result.verdict.value}] {report.identity.value} g={report.genus} "
            f"side={side} elapsed_ms={report.elapsed_ms:.3f}"
        )
        if not report.difference.is_zero():
            lines.append(f"    difference: {report.difference}")
        if not report.expected_difference.is_zero():
            lines.append(f"    expected:   {report.expected_difference}")
        for note in report.notes:
            lines.append(f"    note: {note}")
        if show_provenance:
            lines.append(f"    provenance: {report.provenance}")
    return "\n".join(lines)


def sweep_table(results: list[CellResult]) -> str:
    rows = [_SWEEP_COLUMNS]
    for result in results:
        report = result.report
        rows.append(
            (
                str(report.genus),
                report.identity.value,
                report.side.value if report.side else "-",
                "PASS" if report.passed else "FAIL",
                result.verdict.value,
                str(report.term_count),
                "-" if report.max_total_degree is None else str(report.max_total_degree),
                f"{report.elapsed_ms:.3f}",
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(_SWEEP_COLUMNS))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows
    )


def formula_value(value: FormulaValue, fmt: ShowFormat) -> str:
    if isinstance(value, LaurentPoly) and fmt == ShowFormat.PRETTY:
        return pretty(value)
    return str(value)


def formula_json(formula: Formula, args: FormulaArgs, value: FormulaValue, show_provenance: bool) -> str:
    payload: dict[str, Any] = {
        "formula": formula.formula_id.value,
        "genus": args.genus,
        "value": str(value) if isinstance(value, LaurentPoly) else value,
    }
    if show_provenance:
        payload["provenance"] = formula.provenance
    return json.dumps(payload, ensure_ascii=False)
