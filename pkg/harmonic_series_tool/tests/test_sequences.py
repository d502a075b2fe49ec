"""
Tests for harmonic numbers, tails and their generating functions.
"""
import itertools
import math
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from harmonic_series_tool.engine.errors import DomainError
from harmonic_series_tool.engine.numkernel import agree_digits, to_mpf
from harmonic_series_tool.engine.sequences import (EXACT_INDEX_LIMIT, exp_tail,
                                                   frac_ne, gen_harmonic, gf_exp_tail,
                                                   gf_tail_zeta2, gf_tail_zeta3_over_n,
                                                   harmonic, harmonic_real,
                                                   harmonic_stream, pochhammer_rising,
                                                   skew_harmonic, skew_harmonic_real,
                                                   skew_harmonic_stream, tail_zeta,
                                                   tail_zeta_stream)


def test_harmonic_exact_values():
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    assert gen_harmonic(3, 2) == Fraction(49, 36)
    assert skew_harmonic(1) == 1
    assert skew_harmonic(4) == Fraction(7, 12)


@pytest.mark.parametrize("fn", [harmonic, skew_harmonic])
def test_harmonic_rejects_zero(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_gen_harmonic_rejects_bad_order():
    with pytest.raises(DomainError):
        gen_harmonic(3, 0)


@pytest.mark.parametrize("n", [10, EXACT_INDEX_LIMIT + 1, 500])
def test_real_harmonic_matches_exact(ctx, n):
    with mp.workdps(60):
        assert agree_digits(harmonic_real(n, ctx), to_mpf(harmonic(n)), ctx) >= 30
        assert agree_digits(skew_harmonic_real(n, ctx), to_mpf(skew_harmonic(n)), ctx) >= 30


def test_streams_match_random_access(ctx):
    start = EXACT_INDEX_LIMIT - 2
    harmonics = list(itertools.islice(harmonic_stream(start, ctx), 6))
    skews = list(itertools.islice(skew_harmonic_stream(start, ctx), 6))
    with mp.workdps(60):
        for offset in range(6):
            n = start + offset
            assert agree_digits(harmonics[offset], to_mpf(harmonic(n)), ctx) >= 30
            assert agree_digits(skews[offset], to_mpf(skew_harmonic(n)), ctx) >= 30


def test_tail_zeta(ctx):
    with mp.workdps(60):
        assert agree_digits(tail_zeta(2, 0, ctx), mp.pi ** 2 / 6, ctx) >= 30
        reference = mp.zeta(3) - to_mpf(gen_harmonic(10, 3))
        assert agree_digits(tail_zeta(3, 10, ctx), reference, ctx) >= 30
        # large n: no cancellation against zeta(2)
        big = tail_zeta(2, 10 ** 6, ctx)
        assert big > 0
        assert agree_digits(big, mp.zeta(2, 10 ** 6 + 1), ctx) >= 30


def test_tail_zeta_stream(ctx):
    values = list(itertools.islice(tail_zeta_stream(2, 5, ctx), 3))
    with mp.workdps(60):
        for offset, value in enumerate(values):
            assert agree_digits(value, tail_zeta(2, 5 + offset, ctx), ctx) >= 30


def test_tail_zeta_domain(ctx):
    with pytest.raises(DomainError):
        tail_zeta(1, 3, ctx)
    with pytest.raises(DomainError):
        tail_zeta(2, -1, ctx)


def test_exp_tail(ctx):
    assert exp_tail(0, 5, ctx) == 0
    with mp.workdps(60):
        reference = mp.e - sum(mpf(1) / math.factorial(j) for j in range(4))
        assert agree_digits(exp_tail(1, 3, ctx), reference, ctx) >= 30
        reference = mp.exp(-2) - sum(mpf(-2) ** j / math.factorial(j) for j in range(6))
        assert agree_digits(exp_tail(-2, 5, ctx), reference, ctx) >= 30
    with pytest.raises(DomainError):
        exp_tail(1, -1, ctx)


def test_frac_ne(ctx):
    with mp.workdps(60):
        for n in (1, 2, 5, 12):
            value = math.factorial(n) * mp.e
            assert agree_digits(frac_ne(n, ctx), value - mp.floor(value), ctx) >= 28
    with pytest.raises(DomainError):
        frac_ne(0, ctx)


def test_pochhammer_rising(ctx):
    assert pochhammer_rising(3, 4, ctx) == 3 * 4 * 5 * 6
    with mp.workdps(60):
        half = Fraction(1, 2)
        assert agree_digits(pochhammer_rising(half, 3, ctx), mpf(15) / 8, ctx) >= 30
    with pytest.raises(DomainError):
        pochhammer_rising(1, 0, ctx)


@pytest.mark.parametrize("x", [Fraction(-1, 2), Fraction(1, 3), Fraction(9, 10)])
def test_gf_tail_zeta2_against_mpmath(ctx, x):
    xv = mpf(x.numerator) / x.denominator
    with mp.workdps(60):
        reference = (xv * mp.zeta(2) - mp.polylog(2, xv)) / (1 - xv)
        assert agree_digits(gf_tail_zeta2(x, ctx), reference, ctx) >= 30
    with pytest.raises(DomainError):
        gf_tail_zeta2(1, ctx)


def test_gf_tail_zeta2_against_partial_sums(ctx):
    # |x| = 1/4: 300 terms leave less than 10^-80
    with mp.workdps(60):
        xv = mpf(-1) / 4
        reference = mp.fsum(mp.zeta(2, n + 1) * xv ** n for n in range(1, 300))
        assert agree_digits(gf_tail_zeta2(Fraction(-1, 4), ctx), reference, ctx) >= 30


def test_gf_tail_zeta2_at_minus_one(ctx):
    with mp.workdps(60):
        assert agree_digits(gf_tail_zeta2(-1, ctx), -mp.pi ** 2 / 24, ctx) >= 30


def test_gf_tail_zeta3_over_n_endpoint(ctx):
    with mp.workdps(60):
        assert agree_digits(gf_tail_zeta3_over_n(1, ctx), mp.zeta(4) / 4, ctx) >= 30
        xv = mpf(1) / 2
        reference = mp.fsum(mp.zeta(3, n + 1) * xv ** n / n for n in range(1, 300))
        assert agree_digits(gf_tail_zeta3_over_n(Fraction(1, 2), ctx), reference, ctx) >= 30
    with pytest.raises(DomainError):
        gf_tail_zeta3_over_n(2, ctx)


def test_gf_exp_tail(ctx):
    with mp.workdps(60):
        assert agree_digits(gf_exp_tail(1, 2, ctx), 2 * mp.exp(2), ctx) >= 30
        partial = mpf(0)
        reference = mpf(0)
        for n in range(200):
            partial += mpf(1) / math.factorial(n)
            reference += (mp.e - partial) / mpf(2) ** n
        assert agree_digits(gf_exp_tail(Fraction(1, 2), 1, ctx), reference, ctx) >= 30
    with pytest.raises(DomainError):
        gf_exp_tail(-1, 1, ctx)
