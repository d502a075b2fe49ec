"""
Tests for the special functions, checked against mpmath's own routines.
"""
import random
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from harmonic_series_tool.engine.errors import DomainError
from harmonic_series_tool.engine.numkernel import agree_digits
from harmonic_series_tool.engine.specfun import (QuarterKind, SpecialFunction,
                                                 SpecialValueRequest, dirichlet_beta,
                                                 dirichlet_eta, ei, ein, evaluate_special,
                                                 log_barnes_g, loggamma, negapolygamma2,
                                                 polygamma, polylog, quarter_values,
                                                 riemann_zeta, zeta_nonpositive,
                                                 zeta_prime, zeta_prime_half,
                                                 zeta_prime_neg1,
                                                 zeta_prime_negative_odd)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THREE_QUARTERS = Fraction(3, 4)


def _mpf(x) -> mpf:
    x = Fraction(x)
    return mpf(x.numerator) / x.denominator


def _close(value, reference, ctx, digits=30):
    with mp.workdps(60):
        return agree_digits(value, reference, ctx) >= digits


@pytest.mark.parametrize("s", [2, 3, 5, 8, Fraction(3, 2)])
def test_riemann_zeta(ctx, oracle_dps, s):
    assert _close(riemann_zeta(s, ctx), mp.zeta(_mpf(s)), ctx)


def test_zeta_nonpositive_integers():
    assert zeta_nonpositive(0) == Fraction(-1, 2)
    assert zeta_nonpositive(1) == Fraction(-1, 12)
    assert zeta_nonpositive(2) == 0
    assert zeta_nonpositive(3) == Fraction(1, 120)


def test_riemann_zeta_pole(ctx):
    with pytest.raises(DomainError):
        riemann_zeta(1, ctx)
    with pytest.raises(DomainError):
        riemann_zeta(HALF, ctx)


def test_eta_and_beta(ctx, oracle_dps):
    assert _close(dirichlet_eta(1, ctx), mp.ln2, ctx)
    assert _close(dirichlet_eta(3, ctx), mp.altzeta(3), ctx)
    assert _close(dirichlet_beta(2, ctx), mp.catalan, ctx)
    assert _close(dirichlet_beta(1, ctx), mp.pi / 4, ctx)
    with pytest.raises(DomainError):
        dirichlet_eta(0, ctx)


@pytest.mark.parametrize("s,z", [
    (2, HALF), (3, HALF), (2, Fraction(9, 10)), (3, Fraction(9, 10)),
    (4, Fraction(-3, 4)), (2, -1), (5, Fraction(1, 3)), (1, Fraction(-1, 2)),
])
def test_polylog(ctx, oracle_dps, s, z):
    reference = mp.polylog(s, _mpf(z))
    assert _close(polylog(s, z, ctx), reference, ctx)


def test_polylog_domain(ctx):
    with pytest.raises(DomainError):
        polylog(2, 2, ctx)
    with pytest.raises(DomainError):
        polylog(1, 1, ctx)
    with pytest.raises(DomainError):
        polylog(0, HALF, ctx)


@pytest.mark.parametrize("n,x", [(0, HALF), (0, 7), (1, QUARTER), (2, Fraction(5, 3)), (3, 40)])
def test_polygamma(ctx, oracle_dps, n, x):
    assert _close(polygamma(n, x, ctx), mp.psi(n, _mpf(x)), ctx)


def test_polygamma_domain(ctx):
    with pytest.raises(DomainError):
        polygamma(1, 0, ctx)
    with pytest.raises(DomainError):
        polygamma(-1, 1, ctx)


@pytest.mark.parametrize("z", [QUARTER, HALF, 1, Fraction(3, 2), Fraction(5, 6), Fraction(7, 2)])
def test_log_barnes_g(ctx, oracle_dps, z):
    reference = mp.log(mp.barnesg(_mpf(z)))
    assert _close(log_barnes_g(z, ctx), reference, ctx)


def test_loggamma(ctx, oracle_dps):
    assert _close(loggamma(HALF, ctx), mp.log(mp.sqrt(mp.pi)), ctx)
    with pytest.raises(DomainError):
        loggamma(0, ctx)


@pytest.mark.parametrize("z", [HALF, 1, Fraction(3, 2)])
def test_negapolygamma2_is_integral_of_loggamma(ctx, oracle_dps, z):
    reference = mp.quad(mp.loggamma, [0, _mpf(z)])
    assert _close(negapolygamma2(z, ctx), reference, ctx, digits=25)


def test_ein_and_ei(ctx, oracle_dps):
    assert ein(0, ctx) == 0
    # Ein(z) = E1(z) + log z + gamma for z > 0
    assert _close(ein(2, ctx), mp.e1(2) + mp.log(2) + mp.euler, ctx)
    assert _close(ein(-3, ctx), -mp.ei(3) + mp.log(3) + mp.euler, ctx)
    assert _close(ei(-1, ctx), mp.ei(-1), ctx)
    with pytest.raises(DomainError):
        ei(0, ctx)


def test_zeta_prime(ctx, oracle_dps):
    assert _close(zeta_prime(2, ctx), mp.zeta(2, 1, 1), ctx)
    assert _close(zeta_prime(3, ctx), mp.zeta(3, 1, 1), ctx)
    assert _close(zeta_prime_neg1(ctx), mp.zeta(-1, 1, 1), ctx)
    for k in (1, 2, 3):
        assert _close(zeta_prime_negative_odd(k, ctx), mp.zeta(1 - 2 * k, 1, 1), ctx)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_zeta_prime_half(ctx, oracle_dps, k):
    assert _close(zeta_prime_half(k, ctx), mp.zeta(1 - 2 * k, mpf(1) / 2, 1), ctx)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("which", [QUARTER, THREE_QUARTERS])
def test_quarter_values(ctx, oracle_dps, k, which):
    a = _mpf(which)
    polygamma_value = quarter_values(k, which, QuarterKind.POLYGAMMA, ctx)
    assert _close(polygamma_value, mp.psi(2 * k - 1, a), ctx)
    zeta_value = quarter_values(k, which, QuarterKind.ZETA_PRIME, ctx)
    assert _close(zeta_value, mp.zeta(1 - 2 * k, a, 1), ctx)


def test_quarter_values_domain(ctx):
    with pytest.raises(DomainError):
        quarter_values(1, HALF, QuarterKind.POLYGAMMA, ctx)
    with pytest.raises(DomainError):
        quarter_values(0, QUARTER, QuarterKind.POLYGAMMA, ctx)


def test_evaluate_special_dispatch(ctx, oracle_dps):
    value = evaluate_special(SpecialValueRequest(SpecialFunction.POLYLOG, HALF, 2), ctx)
    assert _close(value, mp.polylog(2, mpf(1) / 2), ctx)
    value = evaluate_special(SpecialValueRequest(SpecialFunction.ZETA, Fraction(3)), ctx)
    assert _close(value, mp.zeta(3), ctx)


def test_evaluate_special_missing_inputs(ctx):
    with pytest.raises(DomainError):
        evaluate_special(SpecialValueRequest(SpecialFunction.ZETA), ctx)
    with pytest.raises(DomainError):
        evaluate_special(SpecialValueRequest(SpecialFunction.POLYGAMMA, HALF), ctx)


def _random_unit_rationals(seed, count=20):
    rng = random.Random(seed)
    return [Fraction(rng.randint(1, 999), 1000) for _ in range(count)]


def test_dilog_reflection_at_random_points(ctx, oracle_dps):
    zeta2 = riemann_zeta(2, ctx)
    for x in _random_unit_rationals(11):
        left = zeta2 - polylog(2, x, ctx)
        right = polylog(2, 1 - x, ctx) + mp.log(_mpf(x)) * mp.log(_mpf(1 - x))
        assert _close(left, right, ctx), x


def test_trigamma_reflection_at_random_points(ctx, oracle_dps):
    for z in _random_unit_rationals(12):
        left = polygamma(1, 1 - z, ctx) + polygamma(1, z, ctx)
        right = mp.pi ** 2 / mp.sin(mp.pi * _mpf(z)) ** 2
        assert _close(left, right, ctx), z


def test_trigamma_duplication_at_random_points(ctx, oracle_dps):
    for z in _random_unit_rationals(13):
        left = polygamma(1, 2 * z, ctx)
        right = (polygamma(1, z, ctx) + polygamma(1, z + HALF, ctx)) / 4
        assert _close(left, right, ctx), z


@pytest.mark.parametrize("n", [0, 1, 2])
def test_polygamma_recurrence_at_random_points(ctx, oracle_dps, n):
    for z in _random_unit_rationals(20 + n, count=10):
        shifted = polygamma(n, z + 1, ctx) - polygamma(n, z, ctx)
        expected = (-1) ** n * mp.factorial(n) * _mpf(z) ** (-n - 1)
        assert _close(shifted, expected, ctx), (n, z)


def test_barnes_g_recurrence_at_random_points(ctx, oracle_dps):
    for z in _random_unit_rationals(14, count=10):
        z = 3 * z
        step = log_barnes_g(z + 1, ctx) - log_barnes_g(z, ctx)
        assert _close(step, loggamma(z, ctx), ctx), z


@pytest.mark.parametrize("z", [Fraction(3, 10), Fraction(17, 10)])
def test_loggamma_weierstrass_product(ctx, oracle_dps, z):
    zv = _mpf(z)
    # partial sum plus the tail expanded to z^5; the z^6 remainder is below 10^-18
    cutoff = 4000
    partial = mp.fsum(mp.log(1 + zv / n) - zv / n for n in range(1, cutoff + 1))
    tail = -zv ** 2 / 2 * mp.zeta(2, cutoff + 1) + zv ** 3 / 3 * mp.zeta(3, cutoff + 1) \
        - zv ** 4 / 4 * mp.zeta(4, cutoff + 1) + zv ** 5 / 5 * mp.zeta(5, cutoff + 1)
    reference = -mp.euler * zv - partial - tail
    assert agree_digits(loggamma(z + 1, ctx), reference, ctx) >= 15
