"""
Harmonic Series Tool Configuration Settings
"""
from dataclasses import dataclass, field
from enum import Enum


class OutputMode(Enum):
    """Report output modes."""
    TEXT = "text"
    JSON = "json"


@dataclass
class PrecisionConfig:
    """Working-precision policy."""
    default_digits: int = 30        # CLI default target
    min_digits: int = 10            # Smallest accepted target
    max_digits: int = 2000          # Largest accepted target
    min_guard_digits: int = 15
    guard_divisor: int = 4          # guard = max(min_guard, target // divisor)
    error_check_extra_digits: int = 10


@dataclass
class SeriesConfig:
    """Summation engine configuration."""
    term_budget: int = 10 ** 7
    cvz_terms_per_digit: float = 1.31   # log10(3 + sqrt(8)) ~ 0.766
    cvz_extra_terms: int = 10
    extrapolation_span: float = 4.0
    extrapolation_guard_digits: int = 20
    decay_validation_terms: int = 1000
    validate_decay: bool = True


@dataclass
class QuadratureConfig:
    """Tanh-sinh quadrature configuration."""
    max_levels: int = 12
    convergence_margin_digits: int = 5


@dataclass
class VerificationConfig:
    """Identity verification defaults."""
    default_threshold: int = 25   # Digits; evaluated in a 40-digit context
    workers: int = 1
    check_errors: bool = False    # Default for verify --check-errors


@dataclass
class OutputConfig:
    """Report formatting configuration."""
    json_indent: int = 2


@dataclass
class Settings:
    """Main settings container."""
    precision: PrecisionConfig = field(default_factory=PrecisionConfig)
    series: SeriesConfig = field(default_factory=SeriesConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    verification: VerificationConfig = field(default_factory=VerificationConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance."""
    return settings


def guard_digits_for(target_digits: int) -> int:
    """
    Guard digits carried on top of a requested target.

    Args:
        target_digits: Decimal digits requested by the caller

    Returns:
        Number of extra working digits
    """
    return max(settings.precision.min_guard_digits,
               target_digits // settings.precision.guard_divisor)
