"""Structured logging setup."""

import logging
import sys

import structlog

from tmsverify.core.config import LogFormat, Settings, get_settings


def setup_logging(settings: Settings | None = None) -> None:
    """
    Configure application logging.

    Sets up structlog on top of the stdlib root logger. Logs go to stderr so
    that stdout carries only reports and polynomials.
    """
    settings = settings or get_settings()
    log_level = getattr(logging, settings.log_level.value.upper(), logging.INFO)

    logging.basicConfig(
        level=log_level,
        format="%(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )

    renderer: structlog.types.Processor
    if settings.log_format == LogFormat.JSON:
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    # numpy/sympy stay quiet unless something is wrong
    logging.getLogger("sympy").setLevel(logging.WARNING)
