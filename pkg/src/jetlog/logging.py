"""Logging for jetlog runs.

Every record carries the id of the CLI run that produced it. The id lives
in a ContextVar; worker processes of the point counter receive it through
``bind_run_id`` as their pool initializer. Records go to stderr, stdout
carries only the report.
"""

import logging
import os
import sys
import uuid
from collections.abc import Iterator
from contextvars import ContextVar
from typing import Any

LOGGER_NAME = "jetlog"
LOG_FORMAT = "%(asctime)s [%(levelname)s] [%(run_id)s] %(name)s: %(message)s"

run_id_ctx: ContextVar[str] = ContextVar("run_id", default="")


def new_run_id() -> str:
    rid = uuid.uuid4().hex[:12]
    run_id_ctx.set(rid)
    return rid


def get_run_id() -> str:
    return run_id_ctx.get() or new_run_id()


def bind_run_id(rid: str) -> None:
    """Pool initializer: adopt the parent run's id in a worker process."""
    run_id_ctx.set(rid)


class RunIdFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        record.run_id = run_id_ctx.get("") or "-"
        return True


def _level_from_env() -> int:
    name = os.environ.get("JETLOG_LOG_LEVEL", "INFO").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.INFO


def setup_logging() -> logging.Logger:
    log = logging.getLogger(LOGGER_NAME)
    if not log.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler.addFilter(RunIdFilter())
        log.addHandler(handler)
    log.setLevel(_level_from_env())
    return log


logger = setup_logging()


def settings_items(obj: object) -> Iterator[tuple[str, str]]:
    """(field, value) pairs of a settings object, pydantic model or namespace."""
    data: dict[str, Any] = obj.model_dump() if hasattr(obj, "model_dump") else dict(vars(obj))
    for key, value in data.items():
        yield key, str(value)


def print_settings(obj: object) -> None:
    """Log the active settings at DEBUG, one line per run."""
    if not logger.isEnabledFor(logging.DEBUG):
        return
    pairs = ", ".join(f"{key}: {value}" for key, value in settings_items(obj))
    logger.debug(f"Settings: {pairs}")
