"""Sweep execution: cells run concurrently, results come back in plan order."""

import asyncio
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import structlog

from tmsverify.core.exceptions import TMSVerifyError
from tmsverify.gamma.stringy import EnumerationOptions
from tmsverify.orchestration.registry import REGISTRY, Cell
from tmsverify.schemas.reports import VerificationReport

logger = structlog.get_logger(__name__)


class Verdict(str, Enum):
    """A report's pass/fail set against the check's expectation."""

    OK = "ok"
    OBSERVED = "observed"
    UNEXPECTED = "unexpected"


@dataclass(frozen=True)
class CellResult:
    cell: Cell
    report: VerificationReport
    verdict: Verdict


class SweepExecutionError(TMSVerifyError):
    """Exception raised when a cell cannot produce a report."""

    def __init__(self, message: str, cell: Cell):
        super().__init__(message)
        self.cell = cell


def judge(cell: Cell, report: VerificationReport) -> Verdict:
    expect_pass = REGISTRY[cell.check].expect_pass
    if report.passed == expect_pass:
        return Verdict.OK if expect_pass else Verdict.OBSERVED
    return Verdict.UNEXPECTED


async def _run_cell(
    cell: Cell,
    semaphore: asyncio.Semaphore,
    options: Optional[EnumerationOptions],
    report_timing: bool,
) -> CellResult:
    spec = REGISTRY[cell.check]
    log = logger.bind(identity=cell.check.value, genus=cell.genus, side=cell.side.value if cell.side else None)
    async with semaphore:
        log.debug("Check started")
        try:
            report = await asyncio.to_thread(spec.run, cell, options)
        except TMSVerifyError:
            raise
        except Exception as e:
            raise SweepExecutionError(f"{cell.check.value} at genus {cell.genus} failed: {e}", cell) from e

    if not report_timing:
        report = report.without_timing()
    verdict = judge(cell, report)
    if verdict == Verdict.UNEXPECTED:
        log.warning("Unexpected verdict", passed=report.passed, difference=str(report.difference))
    else:
        log.info("Check completed", passed=report.passed, verdict=verdict.value, elapsed_ms=report.elapsed_ms)
    return CellResult(cell=cell, report=report, verdict=verdict)


async def execute_sweep(
    cells: list[Cell],
    max_concurrent: int = 4,
    options: Optional[EnumerationOptions] = None,
    report_timing: bool = True,
) -> list[CellResult]:
    """
    Run every cell with at most max_concurrent checks in flight.

    Args:
        cells: Planned cells, already in output order
        max_concurrent: Semaphore size
        options: Enumeration limits passed to group sums
        report_timing: When False, elapsed times are zeroed

    Returns:
        One CellResult per cell, in the order of cells

    Raises:
        TMSVerifyError: If a check raises (SweepExecutionError wraps non-domain errors)
    """
    semaphore = asyncio.Semaphore(max_concurrent)
    return list(
        await asyncio.gather(
            *(_run_cell(cell, semaphore, options, report_timing) for cell in cells)
        )
    )
