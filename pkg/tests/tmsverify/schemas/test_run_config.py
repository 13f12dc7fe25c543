"""Tests for RunConfig and name resolution."""

import pytest

from tmsverify.core.config import Settings
from tmsverify.core.exceptions import (
    ConfigurationError,
    EnumerationBoundError,
    GenusError,
    UnknownCheckError,
)
from tmsverify.schemas.enums import CheckName, Mode, OutputFormat, Side
from tmsverify.schemas.run_config import RunConfig, parse_check_names, parse_sides


def test_parse_check_names() -> None:
    """Test empty selects all, duplicates collapse, unknown names fail."""
    assert parse_check_names([]) == list(CheckName)
    assert parse_check_names(["rhl-kappa", "tms-kappa", "rhl-kappa"]) == [
        CheckName.RHL_KAPPA,
        CheckName.TMS_KAPPA,
    ]
    with pytest.raises(UnknownCheckError) as exc_info:
        parse_check_names(["tms-kapa"])
    assert "tms-kappa" in str(exc_info.value)


def test_parse_sides() -> None:
    """Test side names resolve and unknown ones are configuration errors."""
    assert parse_sides(["betti"]) == [Side.BETTI]
    with pytest.raises(ConfigurationError):
        parse_sides(["de_rham"])


def test_defaults_from_settings(default_settings: Settings) -> None:
    """Test settings supply every unset value."""
    config = RunConfig.from_settings(default_settings)
    assert config.genera == range(2, 9)
    assert config.sides == [Side.DOLBEAULT, Side.BETTI]
    assert config.checks == list(CheckName)
    assert config.mode == Mode.CLOSED_FORM
    assert config.output == OutputFormat.TABLE
    assert config.report_timing


def test_flags_override_settings(default_settings: Settings) -> None:
    """Test explicit values win and lists are put in canonical order."""
    config = RunConfig.from_settings(
        default_settings,
        genus_range=(3, 4),
        sides=["betti", "dolbeault", "betti"],
        checks=["perverse-kappa", "tms-kappa"],
        output=OutputFormat.JSON,
        report_timing=False,
    )
    assert list(config.genera) == [3, 4]
    assert config.sides == [Side.DOLBEAULT, Side.BETTI]
    assert config.checks == [CheckName.TMS_KAPPA, CheckName.PERVERSE_KAPPA]
    assert config.output == OutputFormat.JSON
    assert not config.report_timing


def test_low_genus_is_a_genus_error(default_settings: Settings) -> None:
    """Test g < 2 is rejected before anything runs."""
    with pytest.raises(GenusError):
        RunConfig.from_settings(default_settings, genus_range=(1, 3))


def test_empty_range_and_empty_sides(default_settings: Settings) -> None:
    """Test inverted ranges and empty side lists are configuration errors."""
    with pytest.raises(ConfigurationError, match="empty genus range"):
        RunConfig.from_settings(default_settings, genus_range=(5, 3))
    with pytest.raises(ConfigurationError):
        RunConfig.from_settings(default_settings, sides=[])


def test_enumeration_bound(default_settings: Settings) -> None:
    """Test enumerate mode is refused above the bound and allowed at it."""
    with pytest.raises(EnumerationBoundError) as exc_info:
        RunConfig.from_settings(default_settings, genus_range=(2, 13), mode=Mode.ENUMERATE)
    assert exc_info.value.requested == 26
    config = RunConfig.from_settings(default_settings, genus_range=(2, 12), mode=Mode.ENUMERATE)
    assert config.genus_max == 12
    RunConfig.from_settings(default_settings, genus_range=(2, 30))


def test_explicit_empty_check_selection(default_settings: Settings) -> None:
    """Test an explicit empty selection is refused while an empty setting means every check."""
    with pytest.raises(ConfigurationError, match="no checks selected"):
        RunConfig.from_settings(default_settings, checks=[])
    config = RunConfig.from_settings(default_settings.model_copy(update={"checks": ""}))
    assert config.checks == list(CheckName)
