"""
Tests for the numeric kernel: contexts, digit agreement, elementary
functions, Bernoulli numbers, constants and CVZ acceleration.
"""
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from harmonic_series_tool.config.models import ConstantName, ElementaryFunction
from harmonic_series_tool.engine.errors import DomainError, PrecisionLossError
from harmonic_series_tool.engine.numkernel import (EXACT_AGREEMENT, PrecisionContext,
                                                   accelerate_alternating,
                                                   agree_digits, bernoulli,
                                                   check_error_estimate, constant,
                                                   cvz_terms, dual_evaluate, elementary,
                                                   make_context)
from harmonic_series_tool.engine.specfun import loggamma


def test_make_context_guard_policy():
    ctx = make_context(25)
    assert ctx.target_digits == 25
    assert ctx.guard_digits == 15
    assert ctx.working_digits == 40

    big = make_context(200)
    assert big.guard_digits == 50


def test_make_context_rejects_targets_outside_limits(isolated_settings):
    with pytest.raises(ValueError):
        make_context(5)
    with pytest.raises(ValueError):
        make_context(2001)
    isolated_settings.precision.max_digits = 50
    assert make_context(50).target_digits == 50
    with pytest.raises(ValueError):
        make_context(51)
    with pytest.raises(ValueError):
        PrecisionContext(30, 5)


def test_raised_keeps_target():
    ctx = make_context(30).raised(10)
    assert ctx.target_digits == 30
    assert ctx.working_digits == 30 + 15 + 10


def test_agree_digits():
    assert agree_digits(mpf(1), mpf(1)) == EXACT_AGREEMENT
    ctx = make_context(20)
    assert agree_digits(mpf(2), mpf(2), ctx) == ctx.working_digits
    with mp.workdps(40):
        assert agree_digits(mpf(1), mpf(1) + mpf(10) ** -12) == 12
    assert agree_digits(mpf(1), mpf(2)) == 0
    # scaling by max(|a|, |b|, 1): small values are compared absolutely
    assert agree_digits(mpf(10) ** -30, mpf(0)) == 30


def test_elementary_functions(ctx):
    with mp.workdps(60):
        assert agree_digits(elementary(ElementaryFunction.LOG, 2, ctx), mp.ln2) >= 30
        assert agree_digits(elementary(ElementaryFunction.ATANH, Fraction(1, 2), ctx),
                            mp.atanh(mpf(1) / 2)) >= 30
        assert elementary(ElementaryFunction.POW, -2, ctx, y=3) == -8


@pytest.mark.parametrize("fn,x", [
    (ElementaryFunction.LOG, 0),
    (ElementaryFunction.SQRT, -1),
    (ElementaryFunction.ATANH, 1),
])
def test_elementary_domain_errors(ctx, fn, x):
    with pytest.raises(DomainError):
        elementary(fn, x, ctx)


def test_elementary_pow_domain(ctx):
    with pytest.raises(DomainError):
        elementary(ElementaryFunction.POW, -2, ctx, y=Fraction(1, 2))
    with pytest.raises(DomainError):
        elementary(ElementaryFunction.POW, 0, ctx, y=0)


def test_bernoulli_exact():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == Fraction(-691, 2730)
    with pytest.raises(DomainError):
        bernoulli(-1)


@pytest.mark.parametrize("name,reference", [
    (ConstantName.EULER_GAMMA, lambda: mp.euler),
    (ConstantName.CATALAN, lambda: mp.catalan),
    (ConstantName.GLAISHER, lambda: mp.glaisher),
    (ConstantName.LEMNISCATE,
     lambda: mp.exp(2 * loggamma(Fraction(1, 4), make_context(50))) / (2 * mp.sqrt(2 * mp.pi))),
    (ConstantName.GIESEKING, lambda: mp.clsin(2, mp.pi / 3)),
    (ConstantName.EULER_GOMPERTZ, lambda: -mp.e * mp.ei(-1)),
])
def test_constants(ctx, name, reference):
    value = constant(name, ctx)
    with mp.workdps(60):
        assert agree_digits(value, reference(), ctx) >= 30


def test_accelerate_alternating_log2(ctx):
    n = cvz_terms(ctx)
    with ctx.workdps():
        value, bound = accelerate_alternating(lambda k: mpf(1) / (k + 1), n)
        assert abs(value - mp.ln2) <= bound
        assert agree_digits(value, mp.ln2, ctx) >= 30


@pytest.mark.parametrize("n_terms", [5, 12, 40, 80])
def test_accelerate_alternating_bound_covers_error(n_terms):
    # ln 2 and 1/(k+1)^2 sums at 30 digits; 80 terms leaves only the rounding part
    with mp.workdps(30):
        value, bound = accelerate_alternating(lambda k: mpf(1) / (k + 1), n_terms)
        with mp.workdps(60):
            assert abs(value - mp.ln2) <= bound
        value, bound = accelerate_alternating(lambda k: mpf(1) / (k + 1) ** 2, n_terms)
        with mp.workdps(60):
            assert abs(value - mp.pi ** 2 / 12) <= bound


def test_check_error_estimate(ctx):
    with ctx.workdps():
        check_error_estimate("ok", mpf(1), mpf(10) ** -20, mpf(1) + mpf(10) ** -21, ctx)
        with pytest.raises(PrecisionLossError):
            check_error_estimate("bad", mpf(1), mpf(10) ** -30, mpf(1) + mpf(10) ** -20, ctx)


def test_constant_cache_returns_same_value(ctx):
    first = constant(ConstantName.GLAISHER, ctx)
    second = constant(ConstantName.GLAISHER, ctx)
    assert mpmath.almosteq(first, second, 0)


def test_dual_evaluate_reuses_low_value(ctx):
    calls = []

    def routine(c):
        calls.append(c.working_digits)
        with c.workdps():
            return +mp.pi

    with ctx.workdps():
        low = +mp.pi
    high, difference = dual_evaluate(routine, ctx, low)
    assert calls == [ctx.working_digits + 10]
    assert difference < mpf(10) ** -ctx.target_digits
    with mp.workdps(60):
        assert agree_digits(high, mp.pi, ctx) >= 30


def test_dual_evaluate_detects_precision_loss(ctx):
    # result drifts with the working precision: 25 agreeing digits against a 30-digit target
    def drifting(c):
        with c.workdps():
            return mpf(1) + mpf(10) ** -(c.working_digits - 20)

    with pytest.raises(PrecisionLossError):
        dual_evaluate(drifting, ctx)
