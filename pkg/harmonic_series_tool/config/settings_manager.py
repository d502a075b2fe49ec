"""
Settings Manager for Harmonic Series Tool

Manages persistent user overrides of the verification defaults.
Stores settings in JSON format at: ~/.harmonic_series_tool/settings.json

Features:
- Save/load overrides (digits, threshold, term budget, workers)
- Apply overrides to the global Settings on CLI start-up
- Reset to built-in defaults
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from .settings import Settings

logger = logging.getLogger(__name__)

# Default settings location
DEFAULT_SETTINGS_DIR = Path.home() / ".harmonic_series_tool"
SETTINGS_FILE = DEFAULT_SETTINGS_DIR / "settings.json"

SETTINGS_FORMAT = "harmonic_series_tool_overrides"

# Override key -> (settings section, attribute, minimum)
OVERRIDE_FIELDS = {
    'digits': ('precision', 'default_digits', 10),
    'threshold': ('verification', 'default_threshold', 10),
    'term_budget': ('series', 'term_budget', 1),
    'workers': ('verification', 'workers', 1),
}


class SettingsManager:
    """
    Manages persistent overrides of Settings values.

    Settings are stored in JSON format at ~/.harmonic_series_tool/settings.json
    """

    def __init__(self, settings_file: Optional[Path] = None):
        """
        Initialize settings manager.

        Args:
            settings_file: Optional custom settings file path
                (defaults to ~/.harmonic_series_tool/settings.json)
        """
        self.settings_file = Path(settings_file) if settings_file else SETTINGS_FILE
        self.settings_dir = self.settings_file.parent

    def _ensure_settings_dir(self) -> bool:
        """Create settings directory if it doesn't exist."""
        try:
            self.settings_dir.mkdir(parents=True, exist_ok=True)
            return True
        except OSError as e:
            logger.error(f"Failed to create settings directory: {e}")
            return False

    @staticmethod
    def validate_overrides(overrides: Dict[str, Any]) -> Dict[str, int]:
        """
        Keep the known keys whose values are integers above their minimum.

        Args:
            overrides: Raw mapping, e.g. {"digits": 40, "workers": 4}

        Returns:
            Cleaned mapping; invalid entries are dropped with a warning
        """
        cleaned = {}
        for key, value in overrides.items():
            if key not in OVERRIDE_FIELDS:
                logger.warning(f"Ignoring unknown setting '{key}'")
                continue
            minimum = OVERRIDE_FIELDS[key][2]
            if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
                logger.warning(f"Ignoring invalid value for '{key}': {value!r}")
                continue
            cleaned[key] = value
        return cleaned

    def save_overrides(self, overrides: Dict[str, Any]) -> bool:
        """
        Merge overrides into the settings file.

        Args:
            overrides: Mapping of override keys to integer values

        Returns:
            True if save successful, False otherwise
        """
        merged = self.load_overrides()
        merged.update(self.validate_overrides(overrides))
        document = {
            "version": "1.0",
            "format": SETTINGS_FORMAT,
            "overrides": merged,
        }
        if not self._ensure_settings_dir():
            return False
        try:
            with open(self.settings_file, 'w', encoding='utf-8') as f:
                json.dump(document, f, indent=2, sort_keys=True)
            logger.info(f"Settings saved successfully to {self.settings_file}")
            return True
        except OSError as e:
            logger.error(f"Failed to save settings: {e}")
            return False

    def load_overrides(self) -> Dict[str, int]:
        """
        Load overrides from JSON.

        Returns:
            Validated overrides; empty when the file is missing or corrupt
        """
        if not self.settings_file.exists():
            logger.info("Settings file does not exist - using defaults")
            return {}

        try:
            with open(self.settings_file, 'r', encoding='utf-8') as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            logger.warning(f"Failed to parse settings file (invalid JSON): {e} - using defaults")
            return {}
        except OSError as e:
            logger.warning(f"Failed to load settings: {e} - using defaults")
            return {}

        if not isinstance(document, dict) or not isinstance(document.get("overrides"), dict):
            logger.warning("Invalid settings file format - using defaults")
            return {}
        return self.validate_overrides(document["overrides"])

    def apply_to(self, settings: Settings) -> Dict[str, int]:
        """
        Write stored overrides into a Settings instance.

        Returns:
            The overrides that were applied
        """
        overrides = self.load_overrides()
        for key, value in overrides.items():
            section, attribute, _ = OVERRIDE_FIELDS[key]
            setattr(getattr(settings, section), attribute, value)
        if overrides:
            logger.info(f"Applied settings overrides: {overrides}")
        return overrides

    def reset_to_defaults(self) -> bool:
        """
        Delete settings file to revert to built-in defaults.

        Returns:
            True if reset successful (or file didn't exist), False otherwise
        """
        try:
            if self.settings_file.exists():
                self.settings_file.unlink()
                logger.info("Settings reset to defaults")
            return True
        except OSError as e:
            logger.error(f"Failed to reset settings: {e}")
            return False

    def get_settings_info(self) -> Dict[str, Any]:
        """
        Get information about current settings.

        Returns:
            Dictionary with settings metadata and the stored overrides
        """
        return {
            "settings_file": str(self.settings_file),
            "file_exists": self.settings_file.exists(),
            "using_defaults": not self.settings_file.exists(),
            "overrides": self.load_overrides(),
        }


# Module-level singleton instance
_settings_manager_instance: Optional[SettingsManager] = None


def get_settings_manager() -> SettingsManager:
    """
    Get the global settings manager instance (singleton pattern).

    Returns:
        SettingsManager instance
    """
    global _settings_manager_instance
    if _settings_manager_instance is None:
        _settings_manager_instance = SettingsManager()
    return _settings_manager_instance
