"""Tests for settings loading."""

from pathlib import Path

import pytest

from tmsverify.core.config import CONFIG_PATH_ENV, LogFormat, Settings, load_settings
from tmsverify.core.exceptions import ConfigurationError, ContractViolation, GenusError
from tmsverify.core.guards import require_genus, require_non_negative
from tmsverify.schemas.enums import Mode


def test_defaults() -> None:
    """Test the built-in defaults."""
    settings = load_settings()
    assert settings.genus_min == 2
    assert settings.genus_max == 8
    assert settings.get_sides() == ["dolbeault", "betti"]
    assert settings.get_checks() == []
    assert settings.enumerate_bound == 24
    assert settings.mode == Mode.CLOSED_FORM


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test TMSVERIFY_* variables are read."""
    monkeypatch.setenv("TMSVERIFY_GENUS_MAX", "5")
    monkeypatch.setenv("TMSVERIFY_CHECKS", "tms-kappa, rhl-kappa")
    monkeypatch.setenv("TMSVERIFY_LOG_FORMAT", "json")
    settings = load_settings()
    assert settings.genus_max == 5
    assert settings.get_checks() == ["tms-kappa", "rhl-kappa"]
    assert settings.log_format == LogFormat.JSON


def test_config_file(tmp_path: Path) -> None:
    """Test a dotenv-style config file is read."""
    config = tmp_path / "tmsverify.env"
    config.write_text("TMSVERIFY_GENUS_MAX=4\nTMSVERIFY_MODE=enumerate\n", encoding="utf-8")
    settings = load_settings(str(config))
    assert settings.genus_max == 4
    assert settings.mode == Mode.ENUMERATE


def test_environment_beats_config_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Test environment variables take precedence over the file."""
    config = tmp_path / "tmsverify.env"
    config.write_text("TMSVERIFY_GENUS_MAX=4\n", encoding="utf-8")
    monkeypatch.setenv("TMSVERIFY_GENUS_MAX", "6")
    assert load_settings(str(config)).genus_max == 6


def test_config_path_from_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Test $TMSVERIFY_CONFIG names the file when no path is passed."""
    config = tmp_path / "tmsverify.env"
    config.write_text("TMSVERIFY_ENUMERATE_BOUND=10\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_PATH_ENV, str(config))
    assert load_settings().enumerate_bound == 10


def test_unknown_key_in_config_file(tmp_path: Path) -> None:
    """Test an unknown key is a configuration error."""
    config = tmp_path / "tmsverify.env"
    config.write_text("TMSVERIFY_GENUS_MAXIMUM=4\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_settings(str(config))


def test_invalid_value(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test out-of-range values are configuration errors naming the field."""
    monkeypatch.setenv("TMSVERIFY_ENUMERATE_BOUND", "100")
    with pytest.raises(ConfigurationError, match="enumerate_bound"):
        load_settings()


def test_enumerate_bound_ceiling(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the bound stops at 32, a walk of 2^32 elements."""
    monkeypatch.setenv("TMSVERIFY_ENUMERATE_BOUND", "32")
    assert load_settings().enumerate_bound == 32
    monkeypatch.setenv("TMSVERIFY_ENUMERATE_BOUND", "34")
    with pytest.raises(ConfigurationError, match="enumerate_bound"):
        load_settings()


def test_missing_config_file(tmp_path: Path) -> None:
    """Test a missing file is reported."""
    with pytest.raises(ConfigurationError, match="config file not found"):
        load_settings(str(tmp_path / "absent.env"))


def test_settings_forbid_extra_arguments() -> None:
    """Test the settings model is closed."""
    with pytest.raises(ValueError):
        Settings(genus_maximum=3)  # type: ignore[call-arg]


def test_guards() -> None:
    """Test the shared pre-condition checks."""
    assert require_genus(2) == 2
    with pytest.raises(GenusError, match=r"genus must be ≥ 2 \(got 1\)"):
        require_genus(1)
    assert require_non_negative(0, "dim") == 0
    with pytest.raises(ContractViolation, match="dim"):
        require_non_negative(-1, "dim")
