"""
Tests for the summation engines.
"""
import math

import pytest
from mpmath import mp, mpf

from harmonic_series_tool.config.models import (DecayClass, SeriesSpec, SignPattern,
                                                SumMethod)
from harmonic_series_tool.engine.errors import (BudgetExhaustedError, DomainError,
                                                ExtrapolationError)
from harmonic_series_tool.engine.numkernel import agree_digits, make_context
from harmonic_series_tool.engine.series import (abel_transform, power_tail_model,
                                                sum_alternating_accel, sum_direct,
                                                sum_with_asymptotic_tail,
                                                validate_decay)


def _inverse_squares() -> SeriesSpec:
    return SeriesSpec("inverse-squares", lambda n, ctx: mpf(1) / n ** 2,
                      SignPattern.EVENTUALLY_POSITIVE, DecayClass.power_log(2))


def test_power_tail_model():
    assert power_tail_model(3) == ((1, 0), (2, 0), (3, 0))
    assert power_tail_model(3, with_logs=True, min_exponent=2) == ((2, 0), (2, 1), (3, 0), (3, 1))


def test_sum_direct_factorial(ctx):
    spec = SeriesSpec("exp(1)", lambda n, ctx: mpf(1) / math.factorial(n),
                      SignPattern.EVENTUALLY_POSITIVE, DecayClass.factorial(), start_index=0)
    result = sum_direct(spec, ctx)
    assert result.method == SumMethod.DIRECT
    with mp.workdps(60):
        assert agree_digits(result.value, mp.e, ctx) >= 30
        assert result.est_error < mpf(10) ** -30


def test_sum_direct_geometric(ctx):
    spec = SeriesSpec("halves", lambda n, ctx: mpf(2) ** -n,
                      SignPattern.EVENTUALLY_POSITIVE, DecayClass.geometric(0.5), start_index=0)
    with mp.workdps(60):
        assert agree_digits(sum_direct(spec, ctx).value, 2, ctx) >= 30


def test_sum_direct_alternating_bound(ctx):
    spec = SeriesSpec("alternating-halves", lambda n, ctx: mpf(-2) ** -n,
                      SignPattern.ALTERNATING, DecayClass.geometric(0.5), start_index=0)
    result = sum_direct(spec, ctx)
    with mp.workdps(60):
        last_term = mpf(2) ** -(result.terms_used - 1)
        assert result.est_error == last_term
        assert abs(result.value - mpf(2) / 3) <= last_term / 2 + mpf(10) ** -40
        assert agree_digits(result.value, mpf(2) / 3, ctx) >= 30



def test_sum_direct_budget(ctx):
    with pytest.raises(BudgetExhaustedError) as info:
        sum_direct(_inverse_squares(), ctx, term_budget=100)
    assert info.value.terms == 100
    assert info.value.achieved_digits < 30


def test_sum_alternating_accel(ctx):
    spec = SeriesSpec("alternating-squares",
                      lambda n, ctx: (1 if n % 2 else -1) * mpf(1) / n ** 2,
                      SignPattern.ALTERNATING, DecayClass.power_log(2))
    result = sum_alternating_accel(spec, ctx)
    assert result.method == SumMethod.ALTERNATING_ACCEL
    with mp.workdps(60):
        assert agree_digits(result.value, mp.pi ** 2 / 12, ctx) >= 30


def test_sum_alternating_accel_rejects_non_alternating(ctx):
    with pytest.raises(DomainError):
        sum_alternating_accel(_inverse_squares(), ctx)
    mislabeled = SeriesSpec("mislabeled", lambda n, ctx: mpf(1) / n ** 2,
                            SignPattern.ALTERNATING, DecayClass.power_log(2))
    with pytest.raises(DomainError):
        sum_alternating_accel(mislabeled, ctx)


def test_sum_with_asymptotic_tail():
    ctx = make_context(20)
    result = sum_with_asymptotic_tail(_inverse_squares(), 200, ctx, power_tail_model(10))
    assert result.method == SumMethod.ASYMPTOTIC_TAIL
    with mp.workdps(60):
        assert agree_digits(result.value, mp.pi ** 2 / 6, ctx) >= 20


def test_sum_with_asymptotic_tail_detects_missing_log_terms():
    ctx = make_context(20)
    spec = SeriesSpec("log-over-squares", lambda n, ctx: mp.log(n) / n ** 2,
                      SignPattern.EVENTUALLY_POSITIVE, DecayClass.power_log(2, 1))
    with pytest.raises(ExtrapolationError):
        sum_with_asymptotic_tail(spec, 10, ctx, power_tail_model(2))


def test_abel_transform_alternating_harmonic():
    ctx = make_context(20)
    a = SeriesSpec("signs", lambda n, ctx: mpf(1 if n % 2 else -1),
                   SignPattern.ALTERNATING, DecayClass.power_log(0))
    b = SeriesSpec("reciprocals", lambda n, ctx: mpf(1) / n,
                   SignPattern.EVENTUALLY_POSITIVE, DecayClass.power_log(1))
    transformed = abel_transform(a, b, partial_sums=lambda n, ctx: mpf(n % 2))
    assert transformed.decay == DecayClass.power_log(2)
    with ctx.workdps():
        assert agree_digits(transformed.term(3, ctx), mpf(1) / 12, ctx) >= 30
        assert transformed.term(4, ctx) == 0
    result = sum_with_asymptotic_tail(transformed, 200, ctx, power_tail_model(12))
    with mp.workdps(60):
        assert agree_digits(result.value, mp.ln2, ctx) >= 20


def test_abel_transform_running_sums_and_limit(ctx):
    a = SeriesSpec("ones", lambda n, ctx: mpf(1),
                   SignPattern.EVENTUALLY_POSITIVE, DecayClass.power_log(0))
    b = SeriesSpec("halves", lambda n, ctx: mpf(2) ** -n,
                   SignPattern.EVENTUALLY_POSITIVE, DecayClass.geometric(0.5))
    transformed = abel_transform(a, b, limit=lambda ctx: mpf(0))
    with ctx.workdps():
        # A_k = k, b_k - b_(k+1) = 2^-(k+1)
        assert transformed.term(3, ctx) == mpf(3) / 16
    with mp.workdps(60):
        # sum k 2^-(k+1) = 1
        assert agree_digits(sum_direct(transformed, ctx).value, 1, ctx) >= 30


def test_validate_decay(ctx):
    assert validate_decay(_inverse_squares(), ctx, n_terms=200)
    too_fast = SeriesSpec("claims-geometric", lambda n, ctx: mpf(1) / n ** 2,
                          SignPattern.EVENTUALLY_POSITIVE, DecayClass.geometric(0.1))
    assert not validate_decay(too_fast, ctx, n_terms=200)
