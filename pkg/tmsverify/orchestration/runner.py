"""Sweep runner: plans cells from a RunConfig and reduces verdicts to an exit code."""

import asyncio
import time
from dataclasses import dataclass, field
from typing import Optional

import structlog

from tmsverify.core.config import Settings, get_settings
from tmsverify.gamma.stringy import EnumerationOptions
from tmsverify.orchestration.pipeline import CellResult, Verdict, execute_sweep
from tmsverify.orchestration.registry import plan_cells
from tmsverify.schemas.run_config import RunConfig

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


@dataclass
class SweepOutcome:
    results: list[CellResult] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def unexpected(self) -> list[CellResult]:
        return [r for r in self.results if r.verdict == Verdict.UNEXPECTED]

    @property
    def exit_code(self) -> int:
        return EXIT_UNEXPECTED if self.unexpected else EXIT_OK


async def run_sweep_async(config: RunConfig, settings: Optional[Settings] = None) -> SweepOutcome:
    settings = settings or get_settings()
    options = EnumerationOptions(
        bound=config.enumerate_bound,
        chunk_size=settings.enumerate_chunk_size,
        sample_size=settings.enumerate_sample_size,
        workers=settings.enumerate_workers,
    )
    cells = plan_cells(config.genera, config.checks, config.sides, config.mode)
    started = time.perf_counter()
    results = await execute_sweep(
        cells,
        max_concurrent=settings.max_concurrent_checks,
        options=options,
        report_timing=config.report_timing,
    )
    outcome = SweepOutcome(results=results, elapsed_ms=(time.perf_counter() - started) * 1000)
    logger.info(
        "Sweep finished",
        genera=f"{config.genus_min}..{config.genus_max}",
        cells=len(results),
        unexpected=len(outcome.unexpected),
        elapsed_ms=round(outcome.elapsed_ms, 3),
    )
    return outcome


def run_sweep(config: RunConfig, settings: Optional[Settings] = None) -> SweepOutcome:
    """
    Run the sweep described by config.

    Args:
        config: Validated run configuration
        settings: Settings for concurrency and enumeration limits (global settings if omitted)

    Returns:
        SweepOutcome with results in (genus, check, side) order
    """
    return asyncio.run(run_sweep_async(config, settings))
