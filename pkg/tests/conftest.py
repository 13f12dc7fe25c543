"""pytest fixtures and configuration."""

import logging
import os
from typing import Iterator

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from tmsverify.core.config import Settings, set_settings

# the autouse settings fixture is reset per test, not per example
hypothesis_settings.register_profile(
    "tmsverify",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
hypothesis_settings.load_profile("tmsverify")


@pytest.fixture(autouse=True)
def default_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[Settings]:
    """Install default settings, ignoring any TMSVERIFY_* variables of the host."""
    for key in list(os.environ):
        if key.upper().startswith("TMSVERIFY_"):
            monkeypatch.delenv(key)
    settings = Settings()
    set_settings(settings)
    # built before the test so its monkeypatched variables cannot leak in
    reset = Settings()
    yield settings
    set_settings(reset)
    # CLI tests point the root handler at a captured stream that pytest closes
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
