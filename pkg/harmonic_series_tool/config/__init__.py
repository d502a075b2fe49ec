"""
Config Package

Configuration and data models for the harmonic series tool.
"""
from .settings import (
    get_settings,
    guard_digits_for,
    Settings,
    OutputMode,
)

from .models import (
    ConstantName,
    DecayClass,
    SeriesSpec,
    SignPattern,
    SumMethod,
    SumResult,
    Integrand,
    IdentityRecord,
    VerificationPolicy,
    VerificationReport,
    ReportStatus,
)

from .settings_manager import get_settings_manager, SettingsManager

__all__ = [
    # Settings
    'get_settings',
    'guard_digits_for',
    'Settings',
    'OutputMode',
    'get_settings_manager',
    'SettingsManager',

    # Models
    'ConstantName',
    'DecayClass',
    'SeriesSpec',
    'SignPattern',
    'SumMethod',
    'SumResult',
    'Integrand',
    'IdentityRecord',
    'VerificationPolicy',
    'VerificationReport',
    'ReportStatus',
]
