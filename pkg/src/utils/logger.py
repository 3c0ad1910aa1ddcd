# src/utils/logger.py

"""
Structured logging for the lab (structlog).

Every line goes to stderr, so stdout carries only graph6 and JSON reports.
A CLI run binds its own context once (run id, command, solver mode and the
graph's n and minimum degree d); every later line of the run carries it.
"""

import logging
import sys
import uuid
from typing import Optional

import structlog
from structlog.contextvars import bind_contextvars, clear_contextvars, merge_contextvars

from config.settings import get_settings

_configured = False


def configure_logging() -> None:
    """JSON lines by default; colored key-value lines on a terminal with LOG_FORMAT=text."""
    settings = get_settings()
    pretty = settings.log_format == "text" and sys.stderr.isatty()

    processors = [
        merge_contextvars,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.format_exc_info,
        structlog.processors.EventRenamer("message"),
        structlog.dev.ConsoleRenderer(colors=True, sort_keys=True)
        if pretty
        else structlog.processors.JSONRenderer(sort_keys=True),
    ]

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=settings.log_level.upper())
    structlog.configure(
        processors=processors,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def bind_run_context(
    command: str,
    mode: Optional[str] = None,
    n: Optional[int] = None,
    d: Optional[int] = None,
    workers: int = 1,
) -> str:
    """
    Replace the run context attached to every log line and return the new run id.

    `n` and `d` describe the graph under study (vertex count, minimum degree).
    """
    run_id = uuid.uuid4().hex[:12]
    clear_contextvars()
    context = {"run_id": run_id, "command": command, "workers": workers}
    context.update({key: value for key, value in (("mode", mode), ("n", n), ("d", d)) if value is not None})
    bind_contextvars(**context)
    return run_id


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Module logger, e.g. get_logger("StarFactor"); configures structlog on first use."""
    global _configured
    if not _configured:
        configure_logging()
        _configured = True
    return structlog.get_logger(name)
