"""Shared fixtures for the test suite."""
import pytest
from mpmath import mp

from harmonic_series_tool.config import settings_manager
from harmonic_series_tool.config.settings import Settings
from harmonic_series_tool.config import settings as settings_module
from harmonic_series_tool.engine.numkernel import make_context


@pytest.fixture
def ctx():
    """30-digit precision context."""
    return make_context(30)


@pytest.fixture
def oracle_dps():
    """Run mpmath reference computations at 60 digits."""
    with mp.workdps(60):
        yield


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Fresh settings and a settings file under tmp_path for every test."""
    fresh = Settings()
    monkeypatch.setattr(settings_module, 'settings', fresh)
    manager = settings_manager.SettingsManager(tmp_path / "settings.json")
    monkeypatch.setattr(settings_manager, '_settings_manager_instance', manager)
    return fresh
