"""
Summands Module

SeriesSpec builders for the series of the identity catalog. Each builder
supplies a sequential stream, so partial sums never recompute harmonic
numbers or zeta tails from scratch.
"""
import math
from fractions import Fraction
from typing import Iterator

from mpmath import mp, mpf

from ..config.models import ConstantName, DecayClass, SeriesSpec, SignPattern
from ..engine.numkernel import PrecisionContext, constant, to_mpf
from ..engine.sequences import (exp_tail, frac_ne, harmonic_real,
                                harmonic_stream, skew_harmonic_real,
                                skew_harmonic_stream, tail_zeta,
                                tail_zeta_stream)


def _sign(n: int) -> int:
    return 1 if n % 2 == 0 else -1


def _log_rising(n: int, x: mpf, k: int) -> mpf:
    """log of (n + x - 1)(n + x) ... (n + x + k - 2)."""
    total = mpf(0)
    for j in range(k):
        total += mp.log(n + x - 1 + j)
    return total


def classical_euler(k: int) -> SeriesSpec:
    """H_n / n^k."""
    def term(n, ctx):
        return harmonic_real(n, ctx) / mpf(n) ** k

    def stream(start, ctx):
        n = start
        for h in harmonic_stream(start, ctx):
            yield h / mpf(n) ** k
            n += 1

    return SeriesSpec(f"classical-euler({k})", term, SignPattern.EVENTUALLY_POSITIVE,
                      DecayClass.power_log(k, 1), stream=stream)


def _h_double_stream(start: int, ctx: PrecisionContext) -> Iterator[mpf]:
    """H_(2n) for n = start, start+1, ..."""
    value = harmonic_real(2 * start, ctx)
    n = start
    while True:
        yield value
        value = value + mpf(1) / (2 * n + 1) + mpf(1) / (2 * n + 2)
        n += 1


def s1_series() -> SeriesSpec:
    """H_(2n) (zeta(2) - H_n^(2) - 1/n)."""
    def term(n, ctx):
        return harmonic_real(2 * n, ctx) * (tail_zeta(2, n, ctx) - mpf(1) / n)

    def stream(start, ctx):
        n = start
        for h2, tail in zip(_h_double_stream(start, ctx), tail_zeta_stream(2, start, ctx)):
            yield h2 * (tail - mpf(1) / n)
            n += 1

    return SeriesSpec("s1", term, SignPattern.GENERAL, DecayClass.power_log(2, 1), stream=stream)


def tail2_shifted(k: int) -> SeriesSpec:
    """zeta(2) - H_n^(2) - 1/(n + k)."""
    def term(n, ctx):
        return tail_zeta(2, n, ctx) - mpf(1) / (n + k)

    def stream(start, ctx):
        n = start
        for tail in tail_zeta_stream(2, start, ctx):
            yield tail - mpf(1) / (n + k)
            n += 1

    return SeriesSpec(f"tail2-shifted({k})", term, SignPattern.GENERAL,
                      DecayClass.power_log(2), stream=stream)


def tail2_harmonic() -> SeriesSpec:
    """H_n (zeta(2) - H_n^(2) - 1/n)."""
    def term(n, ctx):
        return harmonic_real(n, ctx) * (tail_zeta(2, n, ctx) - mpf(1) / n)

    def stream(start, ctx):
        n = start
        for h, tail in zip(harmonic_stream(start, ctx), tail_zeta_stream(2, start, ctx)):
            yield h * (tail - mpf(1) / n)
            n += 1

    return SeriesSpec("tail2-harmonic", term, SignPattern.GENERAL,
                      DecayClass.power_log(2, 1), stream=stream)


def skew_tail_over_n(p: int) -> SeriesSpec:
    """Skew-harmonic number times (zeta(p) - H_n^(p)) / n."""
    def term(n, ctx):
        return skew_harmonic_real(n, ctx) * tail_zeta(p, n, ctx) / n

    def stream(start, ctx):
        n = start
        for hbar, tail in zip(skew_harmonic_stream(start, ctx), tail_zeta_stream(p, start, ctx)):
            yield hbar * tail / n
            n += 1

    return SeriesSpec(f"skew-tail{p}-over-n", term, SignPattern.EVENTUALLY_POSITIVE,
                      DecayClass.power_log(p), stream=stream)


def _geometric_decay(x: Fraction) -> DecayClass:
    return DecayClass.geometric(float(abs(x)))


def _sign_pattern_of(x: Fraction) -> SignPattern:
    return SignPattern.ALTERNATING if x < 0 else SignPattern.GENERAL


def gf_tail2_series(x: Fraction) -> SeriesSpec:
    """(zeta(2) - H_n^(2)) x^n."""
    def term(n, ctx):
        return tail_zeta(2, n, ctx) * to_mpf(x) ** n

    def stream(start, ctx):
        xm = to_mpf(x)
        power = xm ** start
        for tail in tail_zeta_stream(2, start, ctx):
            yield tail * power
            power *= xm

    return SeriesSpec(f"gf-tail2({x})", term, _sign_pattern_of(x), _geometric_decay(x),
                      stream=stream)


def gf_tail3_series(x: Fraction) -> SeriesSpec:
    """(zeta(3) - H_n^(3)) x^n / n."""
    def term(n, ctx):
        return tail_zeta(3, n, ctx) * to_mpf(x) ** n / n

    def stream(start, ctx):
        xm = to_mpf(x)
        power = xm ** start
        n = start
        for tail in tail_zeta_stream(3, start, ctx):
            yield tail * power / n
            power *= xm
            n += 1

    if abs(x) == 1:
        decay = DecayClass.power_log(4)
    else:
        decay = _geometric_decay(x)
    return SeriesSpec(f"gf-tail3({x})", term, _sign_pattern_of(x), decay, stream=stream)


def dilog_pair_series(x: Fraction) -> SeriesSpec:
    """(x^n + (1 - x)^n) / n^2, the power series of Li_2(x) + Li_2(1 - x)."""
    y = 1 - x

    def term(n, ctx):
        return (to_mpf(x) ** n + to_mpf(y) ** n) / mpf(n) ** 2

    return SeriesSpec(f"dilog-pair({x})", term, SignPattern.GENERAL,
                      DecayClass.geometric(float(max(x, y))))


def polylog_half_series(s: int) -> SeriesSpec:
    """(1/2)^n / n^s."""
    def term(n, ctx):
        return mpf(2) ** (-n) / mpf(n) ** s

    return SeriesSpec(f"polylog-half({s})", term, SignPattern.GENERAL, DecayClass.geometric(0.5))


def exp_tail_weighted(y: Fraction, skew: bool) -> SeriesSpec:
    """H_n (or the skew-harmonic number) times e^y - sum_{j<=n} y^j/j!."""
    weights = skew_harmonic_stream if skew else harmonic_stream
    weight_at = skew_harmonic_real if skew else harmonic_real

    def term(n, ctx):
        return weight_at(n, ctx) * exp_tail(y, n, ctx)

    def stream(start, ctx):
        n = start
        for w in weights(start, ctx):
            yield w * exp_tail(y, n, ctx)
            n += 1

    kind = "skew" if skew else "harmonic"
    return SeriesSpec(f"exp-tail-{kind}({y})", term, SignPattern.GENERAL,
                      DecayClass.factorial(), stream=stream)


def frac_ne_skew() -> SeriesSpec:
    """Skew-harmonic number times {n! e} / n!."""
    def term(n, ctx):
        return skew_harmonic_real(n, ctx) * frac_ne(n, ctx) / math.factorial(n)

    return SeriesSpec("frac-ne-skew", term, SignPattern.GENERAL, DecayClass.factorial())


def _hardy_stream(k: int, x: Fraction, start: int, ctx: PrecisionContext) -> Iterator[mpf]:
    """H_n - (1/k) log (n + x - 1)^(rising k) - gamma."""
    xm = to_mpf(x)
    gamma = constant(ConstantName.EULER_GAMMA, ctx)
    n = start
    for h in harmonic_stream(start, ctx):
        yield h - _log_rising(n, xm, k) / k - gamma
        n += 1


def _hardy_term(k: int, x: Fraction, n: int, ctx: PrecisionContext) -> mpf:
    return (harmonic_real(n, ctx) - _log_rising(n, to_mpf(x), k) / k
            - constant(ConstantName.EULER_GAMMA, ctx))


def hardy_correction(k: int, x: Fraction) -> SeriesSpec:
    """b_n = H_n - (1/k) log (n + x - 1)^(rising k) - gamma, as a sequence."""
    def term(n, ctx):
        return _hardy_term(k, x, n, ctx)

    def stream(start, ctx):
        return _hardy_stream(k, x, start, ctx)

    return SeriesSpec(f"hardy-correction({k},{x})", term, SignPattern.GENERAL,
                      DecayClass.power_log(1), stream=stream)


def hardy_alternating(k: int, x: Fraction) -> SeriesSpec:
    """(-1)^n (H_n - (1/k) log (n + x - 1)^(rising k) - gamma)."""
    def term(n, ctx):
        return _sign(n) * _hardy_term(k, x, n, ctx)

    def stream(start, ctx):
        n = start
        for b in _hardy_stream(k, x, start, ctx):
            yield _sign(n) * b
            n += 1

    return SeriesSpec(f"hardy-alternating({k},{x})", term, SignPattern.ALTERNATING,
                      DecayClass.power_log(1), stream=stream)


def alternating_unit() -> SeriesSpec:
    """a_n = (-1)^n."""
    return SeriesSpec("alternating-unit", lambda n, ctx: mpf(_sign(n)),
                      SignPattern.ALTERNATING, DecayClass.power_log(0))


def alternating_unit_partial_sum(n: int, ctx: PrecisionContext) -> mpf:
    """(-1) + 1 - 1 + ... + (-1)^n: -1 for odd n, 0 for even n."""
    return mpf(-1) if n % 2 == 1 else mpf(0)


def hardy_positive(k: int, x: Fraction) -> SeriesSpec:
    """H_n - (1/k) log (n + x - 1)^(rising k) - gamma + (x - 2)/n + k/(2n)."""
    shift = x - 2 + Fraction(k, 2)

    def term(n, ctx):
        return _hardy_term(k, x, n, ctx) + to_mpf(shift) / n

    def stream(start, ctx):
        c = to_mpf(shift)
        n = start
        for b in _hardy_stream(k, x, start, ctx):
            yield b + c / n
            n += 1

    return SeriesSpec(f"hardy-positive({k},{x})", term, SignPattern.GENERAL,
                      DecayClass.power_log(2), stream=stream)


def hardy_weighted(x: Fraction) -> SeriesSpec:
    """(-1)^n n (H_n - log(n + x - 1) - gamma + x/n - 3/(2n))."""
    shift = x - Fraction(3, 2)

    def term(n, ctx):
        return _sign(n) * (n * _hardy_term(1, x, n, ctx) + to_mpf(shift))

    def stream(start, ctx):
        c = to_mpf(shift)
        n = start
        for b in _hardy_stream(1, x, start, ctx):
            yield _sign(n) * (n * b + c)
            n += 1

    return SeriesSpec(f"hardy-weighted({x})", term, SignPattern.ALTERNATING,
                      DecayClass.power_log(1), stream=stream)


def digamma_alternating(z: Fraction) -> SeriesSpec:
    """(-1)^n / (n + z) from n = 0."""
    def term(n, ctx):
        return _sign(n) / (n + to_mpf(z))

    return SeriesSpec(f"digamma-alternating({z})", term, SignPattern.ALTERNATING,
                      DecayClass.power_log(1), start_index=0)


def weierstrass_loggamma(z: Fraction) -> SeriesSpec:
    """-[log(1 + z/n) - z/n]."""
    def term(n, ctx):
        ratio = to_mpf(z) / n
        return ratio - mp.log1p(ratio)

    return SeriesSpec(f"weierstrass-loggamma({z})", term, SignPattern.GENERAL,
                      DecayClass.power_log(2))
