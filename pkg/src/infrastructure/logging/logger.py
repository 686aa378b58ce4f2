"""Structured logging with per-run ids, text and JSON output."""

import json
import logging
import sys
from contextvars import ContextVar
from dataclasses import dataclass, field
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, Optional
from uuid import uuid4

ROOT_LOGGER = "transmat"

_run_id: ContextVar[str] = ContextVar("run_id", default="")

_RECORD_FIELDS = frozenset(
    (
        "name", "msg", "args", "created", "filename", "funcName",
        "levelname", "levelno", "lineno", "module", "msecs",
        "pathname", "process", "processName", "relativeCreated",
        "stack_info", "exc_info", "exc_text", "thread", "threadName",
        "message", "taskName",
    )
)


class RunContext:
    """Context manager that tags every record of one invocation with a run id."""

    def __init__(self, run_id: Optional[str] = None):
        self.run_id = run_id or uuid4().hex[:8]
        self._token = None

    def __enter__(self) -> str:
        self._token = _run_id.set(self.run_id)
        return self.run_id

    def __exit__(self, *args) -> None:
        if self._token is not None:
            _run_id.reset(self._token)
            self._token = None

    @staticmethod
    def get_current() -> str:
        return _run_id.get()


@dataclass
class LogConfig:
    """Configuration for logging."""
    level: str = "WARNING"
    format: str = "text"  # "text" or "json"
    console_output: bool = True
    file_path: Optional[Path] = None
    max_file_size_mb: int = 10
    backup_count: int = 3
    include_timestamp: bool = True
    include_run_id: bool = True
    extra_fields: Dict[str, Any] = field(default_factory=dict)


class JsonFormatter(logging.Formatter):
    """One JSON object per record; ``extra`` fields are merged in."""

    def __init__(self, config: LogConfig):
        super().__init__()
        self.config = config

    def format(self, record: logging.LogRecord) -> str:
        data: Dict[str, Any] = {
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
        }
        if self.config.include_timestamp:
            data["timestamp"] = datetime.now(timezone.utc).isoformat()
        if self.config.include_run_id and RunContext.get_current():
            data["run_id"] = RunContext.get_current()
        if record.exc_info:
            data["exception"] = self.formatException(record.exc_info)
        for key, value in record.__dict__.items():
            if key not in _RECORD_FIELDS:
                data[key] = value
        data.update(self.config.extra_fields)
        return json.dumps(data, default=str, ensure_ascii=False)


class TextFormatter(logging.Formatter):
    """Single-line text records with a coloured level tag."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def __init__(self, config: LogConfig, use_colors: bool = True):
        super().__init__()
        self.config = config
        self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        parts = []
        if self.config.include_timestamp:
            parts.append(datetime.now(timezone.utc).strftime("%H:%M:%S"))
        level = record.levelname
        if self.use_colors and level in self.COLORS:
            level = f"{self.COLORS[level]}{level}{self.RESET}"
        parts.append(f"[{level:^8}]")
        if self.config.include_run_id and RunContext.get_current():
            parts.append(f"[{RunContext.get_current()}]")
        parts.append(f"{record.name}:")
        parts.append(record.getMessage())
        text = " ".join(parts)
        if record.exc_info:
            text += "\n" + self.formatException(record.exc_info)
        return text


class TransmatLogger(logging.Logger):
    """Logger with helpers for the long-running enumeration events."""

    def enumeration_start(self, what: str, size: int, workers: int = 1, **kwargs: Any) -> None:
        self.debug(
            f"{what}: enumerating {size} items on {workers} worker(s)",
            extra={"event": "enumeration_start", "what": what, "size": size, "workers": workers, **kwargs},
        )

    def enumeration_end(self, what: str, size: int, duration_seconds: float, **kwargs: Any) -> None:
        self.debug(
            f"{what}: {size} items in {duration_seconds:.3f}s",
            extra={
                "event": "enumeration_end",
                "what": what,
                "size": size,
                "duration_seconds": duration_seconds,
                **kwargs,
            },
        )

    def budget_exceeded(self, what: str, required: int, limit: int, **kwargs: Any) -> None:
        self.warning(
            f"{what}: needs {required}, cap is {limit}",
            extra={"event": "budget_exceeded", "what": what, "required": required, "limit": limit, **kwargs},
        )

    def consistency_failure(self, what: str, detail: str, **kwargs: Any) -> None:
        """Two routes to the same quantity disagreed."""
        self.error(
            f"{what}: {detail}",
            extra={"event": "consistency_failure", "what": what, "detail": detail, **kwargs},
        )


logging.setLoggerClass(TransmatLogger)


def setup_logging(config: Optional[LogConfig] = None) -> None:
    """
    Install handlers on the ``transmat`` logger.

    Console output goes to stderr so command output on stdout stays parseable.

    Args:
        config: Logging configuration
    """
    config = config or LogConfig()
    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(getattr(logging, config.level.upper(), logging.WARNING))
    root.handlers.clear()
    root.propagate = False

    if config.console_output:
        console = logging.StreamHandler(sys.stderr)
        if config.format == "json":
            console.setFormatter(JsonFormatter(config))
        else:
            console.setFormatter(TextFormatter(config, use_colors=sys.stderr.isatty()))
        root.addHandler(console)

    if config.file_path:
        path = Path(config.file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        handler = RotatingFileHandler(
            path,
            maxBytes=config.max_file_size_mb * 1024 * 1024,
            backupCount=config.backup_count,
        )
        handler.setFormatter(JsonFormatter(config))
        root.addHandler(handler)


def get_logger(name: str = ROOT_LOGGER) -> TransmatLogger:
    """
    Get a logger under the ``transmat`` namespace.

    Args:
        name: Logger name (prefixed with ``transmat.`` when needed)
    """
    if not name.startswith(ROOT_LOGGER):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)  # type: ignore[return-value]
