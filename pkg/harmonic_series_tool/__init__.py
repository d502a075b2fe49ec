"""
Harmonic Series Tool
====================
A Python package for high-precision verification of identities involving
harmonic numbers, zeta tails and related special functions.

Supports:
- Classical and alternating Euler sums (closed forms and numeric checks)
- Series with zeta and exponential tails
- Hardy-type series with Pochhammer corrections
- Special values of polygamma, Barnes G and Hurwitz zeta derivatives

Features:
- Arbitrary-precision summation with accelerated and extrapolated tails
- Tanh-sinh quadrature for the integral lemmas
- A catalog of identities checked side against side to a digit threshold
- Text and JSON verification reports
"""

__version__ = "1.0.0"
__author__ = "Harmonic Series Tools"

from .config.models import IdentityRecord, VerificationReport
from .config.settings import Settings
