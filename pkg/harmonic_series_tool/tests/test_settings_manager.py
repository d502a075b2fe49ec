"""
Tests for persistent settings overrides.
"""
import json

from harmonic_series_tool.config.settings import Settings, guard_digits_for
from harmonic_series_tool.config.settings_manager import (SETTINGS_FORMAT, SettingsManager,
                                                          get_settings_manager)


def test_defaults():
    settings = Settings()
    assert settings.precision.default_digits == 30
    assert settings.verification.default_threshold == 25
    assert guard_digits_for(25) == 15
    assert guard_digits_for(100) == 25


def test_validate_overrides_drops_bad_entries():
    cleaned = SettingsManager.validate_overrides(
        {'digits': 40, 'workers': 0, 'threshold': '30', 'colour': 3, 'term_budget': True})
    assert cleaned == {'digits': 40}


def test_save_and_load_round_trip(tmp_path):
    manager = SettingsManager(tmp_path / "nested" / "settings.json")
    assert manager.load_overrides() == {}
    assert manager.save_overrides({'digits': 50, 'workers': 2})
    assert manager.save_overrides({'threshold': 20})

    document = json.loads(manager.settings_file.read_text(encoding='utf-8'))
    assert document['format'] == SETTINGS_FORMAT
    assert manager.load_overrides() == {'digits': 50, 'workers': 2, 'threshold': 20}


def test_corrupt_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text("{not json", encoding='utf-8')
    assert SettingsManager(path).load_overrides() == {}
    path.write_text(json.dumps({"overrides": [1, 2]}), encoding='utf-8')
    assert SettingsManager(path).load_overrides() == {}


def test_apply_to_settings(tmp_path):
    manager = SettingsManager(tmp_path / "settings.json")
    manager.save_overrides({'threshold': 18, 'term_budget': 5000})
    settings = Settings()
    applied = manager.apply_to(settings)
    assert applied == {'threshold': 18, 'term_budget': 5000}
    assert settings.verification.default_threshold == 18
    assert settings.series.term_budget == 5000


def test_reset_and_info(tmp_path):
    manager = SettingsManager(tmp_path / "settings.json")
    info = manager.get_settings_info()
    assert info['using_defaults'] and not info['file_exists']
    manager.save_overrides({'digits': 12})
    assert manager.get_settings_info()['overrides'] == {'digits': 12}
    assert manager.reset_to_defaults()
    assert not manager.settings_file.exists()
    assert manager.reset_to_defaults()


def test_singleton_is_isolated_per_test(tmp_path):
    assert get_settings_manager().settings_file == tmp_path / "settings.json"
