"""Command-line entry point: ``tmsverify verify|sweep|show``."""

import argparse
import sys
import uuid
from typing import Callable, Optional, Sequence

import structlog
from pydantic import ValidationError

from tmsverify import __version__
from tmsverify.catalog.registry import FormulaArgs, get_formula
from tmsverify.cli import render
from tmsverify.core.config import Settings, load_settings, set_settings
from tmsverify.core.exceptions import (
    ConfigurationError,
    EnumerationBoundError,
    GenusError,
    TMSVerifyError,
    UnknownCheckError,
    UnknownFormulaError,
)
from tmsverify.core.guards import require_genus
from tmsverify.core.logging import setup_logging
from tmsverify.orchestration.runner import EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE, run_sweep
from tmsverify.schemas.enums import Mode, OutputFormat, ShowFormat
from tmsverify.schemas.errors import error_response
from tmsverify.schemas.run_config import RunConfig

logger = structlog.get_logger(__name__)

USAGE_ERRORS = (
    GenusError,
    UnknownCheckError,
    UnknownFormulaError,
    EnumerationBoundError,
    ConfigurationError,
)

Handler = Callable[[argparse.Namespace, Settings], int]


def parse_genus_range(text: str) -> tuple[int, int]:
    """Parse ``A..B`` (or a single ``A``) into an inclusive range."""
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or A, got '{text}'") from None
    return start, stop


def _csv(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--genus", type=parse_genus_range, metavar="A..B", help="genus range (inclusive)")
    parser.add_argument("--sides", type=_csv, help="comma-separated sides (dolbeault,betti)")
    parser.add_argument("--checks", type=_csv, help="comma-separated check names (default: all)")
    parser.add_argument("--mode", type=Mode, metavar="{closed_form,enumerate}", help="group sum assembly")
    parser.add_argument("--format", dest="output", type=OutputFormat, metavar="{table,json}")
    parser.add_argument("--show-provenance", action="store_true", default=None)
    parser.add_argument("--enumerate-bound", type=int, metavar="N", help="largest 2g for enumerate mode")
    parser.add_argument(
        "--no-timing",
        dest="report_timing",
        action="store_false",
        default=None,
        help="zero elapsed times for byte-stable output",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmsverify",
        description="Exact verification of rank-two topological mirror symmetry identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="key-value config file (default: $TMSVERIFY_CONFIG)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify", help="run checks and print every report")
    _add_run_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    sweep = subparsers.add_parser("sweep", help="run checks and print one summary row per cell")
    _add_run_flags(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    show = subparsers.add_parser("show", help="print a catalog formula")
    show.add_argument("formula", help="formula id, e.g. ie_dol_sl2_kappa")
    show.add_argument("--genus", type=int, required=True)
    show.add_argument("--r", dest="rank", type=int, default=2, help="rank (total_dimension only)")
    show.add_argument("--trivial", action="store_true", help="γ = 0 (fermionic_shift only)")
    show.add_argument(
        "--format",
        dest="show_format",
        type=ShowFormat,
        metavar="{pretty,canonical,json}",
        default=ShowFormat.CANONICAL,
    )
    show.add_argument("--show-provenance", action="store_true")
    show.set_defaults(handler=cmd_show)
    return parser


def _run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    return RunConfig.from_settings(
        settings,
        genus_range=args.genus,
        sides=args.sides,
        checks=args.checks,
        mode=args.mode,
        output=args.output,
        show_provenance=args.show_provenance,
        report_timing=args.report_timing,
    )


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    config = _run_config(args, settings)
    outcome = run_sweep(config, settings)
    header = render.verify_header(config, outcome.results)
    if config.output == OutputFormat.JSON:
        print(header, file=sys.stderr)
        print(render.reports_json(outcome.results))
    else:
        print(header)
        print(render.verify_table(outcome.results, config.show_provenance))
    return outcome.exit_code


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    config = _run_config(args, settings)
    outcome = run_sweep(config, settings)
    if config.output == OutputFormat.JSON:
        print(render.reports_json(outcome.results))
    else:
        print(render.sweep_table(outcome.results))
    return outcome.exit_code


def cmd_show(args: argparse.Namespace, settings: Settings) -> int:
    formula = get_formula(args.formula)
    require_genus(args.genus)
    if args.rank < 2:
        raise ConfigurationError(f"--r must be ≥ 2 (got {args.rank})")
    formula_args = FormulaArgs(genus=args.genus, rank=args.rank, gamma_is_trivial=args.trivial)
    value = formula(formula_args)
    if args.show_format == ShowFormat.JSON:
        print(render.formula_json(formula, formula_args, value, args.show_provenance))
        return EXIT_OK
    print(render.formula_value(value, args.show_format))
    if args.show_provenance:
        print(f"# provenance: {formula.provenance}")
    return EXIT_OK


def _with_overrides(settings: Settings, args: argparse.Namespace) -> Settings:
    bound = getattr(args, "enumerate_bound", None)
    if bound is None:
        return settings
    try:
        return Settings.model_validate({**settings.model_dump(), "enumerate_bound": bound})
    except ValidationError as e:
        raise ConfigurationError(f"invalid --enumerate-bound {bound}: {e.errors()[0]['msg']}") from e


def _json_requested(args: argparse.Namespace) -> bool:
    return getattr(args, "output", None) == OutputFormat.JSON or getattr(args, "show_format", None) == ShowFormat.JSON


def _report_error(exc: TMSVerifyError, args: argparse.Namespace, run_id: str) -> None:
    if _json_requested(args):
        print(error_response(exc, run_id).model_dump_json(indent=2))
    else:
        print(f"tmsverify: error: {exc}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Returns:
        0 when every verdict is as expected, 1 on an unexpected verdict or an
        undecidable check, 2 on usage and configuration errors
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    run_id = str(uuid.uuid4())
    try:
        settings = _with_overrides(load_settings(args.config), args)
        set_settings(settings)
        setup_logging(settings)
        structlog.contextvars.bind_contextvars(run_id=run_id)
        handler: Handler = args.handler
        return handler(args, settings)
    except USAGE_ERRORS as e:
        _report_error(e, args, run_id)
        return EXIT_USAGE
    except TMSVerifyError as e:
        logger.error("Run aborted", error=str(e), error_type=type(e).__name__)
        _report_error(e, args, run_id)
        return EXIT_UNEXPECTED
