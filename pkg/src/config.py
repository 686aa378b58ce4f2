"""Configuration management using Pydantic Settings."""

import json
from pathlib import Path
from typing import Optional

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .core.exceptions import InputError


class EnumerationConfig(BaseSettings):
    """Transversal enumeration limits and parallelism."""

    model_config = SettingsConfigDict(env_prefix="ENUM_")

    max_transversal_vertices: int = Field(
        default=12, ge=0, description="Largest n for which all 3^n transversals may be enumerated"
    )
    workers: int = Field(default=1, ge=1, description="Worker threads for index-range reductions")
    chunk_size: int = Field(default=4096, ge=1, description="Indices handed to a worker at a time")
    progress: bool = Field(default=False, description="Show a progress bar on long enumerations")


class MatroidConfig(BaseSettings):
    """Exhaustive matroid computation caps."""

    model_config = SettingsConfigDict(env_prefix="MATROID_")

    exhaustive_limit: int = Field(default=18, ge=0, description="Largest ground set compared subset by subset")
    tutte_subset_cap: int = Field(default=1 << 20, ge=1, description="Most subsets summed by tutte_eval")
    interlace_vertex_cap: int = Field(default=20, ge=0, description="Largest graph for the interlace polynomial")
    bollobas_riordan_edge_cap: int = Field(default=20, ge=0, description="Most ribbon edges for the BR sum")


class PlanarityConfig(BaseSettings):
    """Local complementation orbit search settings."""

    model_config = SettingsConfigDict(env_prefix="PLANAR_")

    state_cap: int = Field(default=1_000_000, ge=1, description="Distinct interlacement graphs explored")
    exact_canonical_limit: int = Field(
        default=8, ge=1, description="Orderings up to this factorial are searched for a canonical key"
    )


class KnotConfig(BaseSettings):
    """Bracket state sum limits."""

    model_config = SettingsConfigDict(env_prefix="KNOT_")

    max_crossings: int = Field(default=20, ge=0, description="Most crossings for the 2^n state sum")


class LoggingConfig(BaseSettings):
    """Logging configuration."""

    model_config = SettingsConfigDict(env_prefix="LOG_")

    level: str = Field(default="WARNING", description="Log level")
    format: str = Field(default="text", description="Log format: text, json")
    file_path: Optional[str] = Field(default=None, description="Log file path")
    max_file_size_mb: int = Field(default=10, description="Rotate the log file at this size")
    backup_count: int = Field(default=3, description="Number of rotated files kept")


class TransmatConfig(BaseSettings):
    """Main transmat configuration."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    matroid: MatroidConfig = Field(default_factory=MatroidConfig)
    planarity: PlanarityConfig = Field(default_factory=PlanarityConfig)
    knot: KnotConfig = Field(default_factory=KnotConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    app_name: str = Field(default="transmat", description="Application name")
    version: str = Field(default="1.0.0", description="Application version")


# Global configuration instance
_config: Optional[TransmatConfig] = None


def get_config() -> TransmatConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = TransmatConfig()
    return _config


def set_config(config: Optional[TransmatConfig]) -> None:
    """Replace the global configuration (None resets to defaults on next use)."""
    global _config
    _config = config


def load_config(config_path: Optional[str] = None) -> TransmatConfig:
    """Load configuration from a YAML or JSON file, falling back to the environment."""
    global _config

    if config_path:
        path = Path(config_path)
        if not path.exists():
            raise InputError(f"config file not found: {config_path}")
        with open(path, encoding="utf-8") as f:
            if path.suffix in (".yaml", ".yml"):
                data = yaml.safe_load(f) or {}
            else:
                data = json.load(f)
        _config = TransmatConfig(**data)
    else:
        _config = TransmatConfig()

    return _config
