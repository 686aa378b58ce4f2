"""Logging infrastructure."""

from .logger import (
    JsonFormatter,
    LogConfig,
    RunContext,
    TextFormatter,
    TransmatLogger,
    get_logger,
    setup_logging,
)

__all__ = [
    "get_logger",
    "setup_logging",
    "LogConfig",
    "RunContext",
    "JsonFormatter",
    "TextFormatter",
    "TransmatLogger",
]
