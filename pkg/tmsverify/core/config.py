"""Settings/configuration (Pydantic BaseSettings)."""

import os
from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from tmsverify.core.exceptions import ConfigurationError
from tmsverify.schemas.enums import Mode, OutputFormat

CONFIG_PATH_ENV = "TMSVERIFY_CONFIG"
# 2^32 group elements is the largest walk enumerate mode attempts
ENUMERATE_BOUND_CEILING = 32


class LogLevel(str, Enum):
    """Log levels."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LogFormat(str, Enum):
    """Log formats."""

    JSON = "json"
    TEXT = "text"


class Settings(BaseSettings):
    """Defaults for verification runs, loaded from the environment and an optional config file."""

    model_config = SettingsConfigDict(
        env_prefix="TMSVERIFY_",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="forbid",
    )

    # Run defaults
    genus_min: int = Field(default=2, ge=2, description="Lowest genus of a sweep")
    genus_max: int = Field(default=8, ge=2, description="Highest genus of a sweep")
    sides: str = Field(
        default="dolbeault,betti",
        description="Comma-separated sides for side-aware checks",
    )
    checks: str = Field(
        default="",
        description="Comma-separated check names (empty selects every check)",
    )
    mode: Mode = Field(default=Mode.CLOSED_FORM, description="Group sum assembly mode")
    output: OutputFormat = Field(default=OutputFormat.TABLE, description="Report format")
    show_provenance: bool = Field(default=False, description="Print provenance strings")
    report_timing: bool = Field(
        default=True,
        description="Record elapsed time in reports (disable for byte-stable output)",
    )

    # Enumeration
    enumerate_bound: int = Field(
        default=24,
        ge=2,
        le=ENUMERATE_BOUND_CEILING,
        description="Largest 2g for which enumerate mode walks every group element",
    )
    enumerate_chunk_size: int = Field(
        default=65536,
        ge=1,
        description="Group elements classified per vectorized chunk",
    )
    enumerate_sample_size: int = Field(
        default=4,
        ge=1,
        le=64,
        description="Nontrivial elements per chunk whose terms are compared pairwise",
    )
    enumerate_workers: int = Field(
        default=1,
        ge=1,
        le=32,
        description="Threads used to process enumeration chunks",
    )

    # Concurrency
    max_concurrent_checks: int = Field(
        default=4,
        ge=1,
        le=64,
        description="Maximum checks running at once during a sweep",
    )

    # Logging
    log_level: LogLevel = Field(default=LogLevel.INFO, description="Log level")
    log_format: LogFormat = Field(default=LogFormat.TEXT, description="Log format (json or text)")

    def get_sides(self) -> List[str]:
        """Parse comma-separated side names into a list."""
        return [item.strip() for item in self.sides.split(",") if item.strip()]

    def get_checks(self) -> List[str]:
        """Parse comma-separated check names into a list."""
        return [item.strip() for item in self.checks.split(",") if item.strip()]


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Build settings from the environment and an optional key-value config file.

    Args:
        config_path: Path to a dotenv-style file; defaults to $TMSVERIFY_CONFIG

    Returns:
        Settings instance

    Raises:
        ConfigurationError: If the file is missing or holds invalid keys or values
    """
    path = config_path or os.environ.get(CONFIG_PATH_ENV)
    if path and not Path(path).is_file():
        raise ConfigurationError(f"config file not found: {path}")
    try:
        return Settings(_env_file=path)  # type: ignore[call-arg]
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise ConfigurationError(f"invalid configuration: {problems}") from e


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get or create the global settings instance.

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Settings) -> None:
    """Replace the global settings instance (used by the CLI after parsing flags)."""
    global _settings
    _settings = settings
