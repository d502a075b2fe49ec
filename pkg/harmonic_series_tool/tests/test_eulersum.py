"""
Tests for symbolic Euler sums, normalization and the expression text format.
"""
from fractions import Fraction

import pytest
from mpmath import mp

from harmonic_series_tool.engine.errors import DomainError, ExpressionSyntaxError
from harmonic_series_tool.engine.eulersum import (FROZEN_CONVENTION, GAMMA, LOG2, PI2,
                                                  Expression, alternating_euler_series,
                                                  calibrate_alternating_convention,
                                                  euler_alternating, euler_classical, eta,
                                                  expr_eval, format_expression, li_half,
                                                  log_g, log_power_integral_closed,
                                                  normalize, parse_expression, zeta)
from harmonic_series_tool.engine.numkernel import agree_digits
from harmonic_series_tool.engine.series import sum_alternating_accel


def test_euler_alternating_first_case():
    assert format_expression(euler_alternating(1, 2)) == "5/8*zeta(3)"


def test_euler_classical_values():
    assert format_expression(euler_classical(2)) == "2*zeta(3)"
    assert format_expression(euler_classical(3)) == "5/4*zeta(4)"


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3), (1, 4), (3, 2), (2, 5), (4, 3)])
def test_euler_alternating_matches_summation(ctx, p, q):
    closed = expr_eval(euler_alternating(p, q), ctx)
    summed = sum_alternating_accel(alternating_euler_series(p, q), ctx).value
    with mp.workdps(60):
        assert agree_digits(closed, summed, ctx) >= 30


def test_euler_alternating_domain():
    with pytest.raises(DomainError):
        euler_alternating(1, 3)
    with pytest.raises(DomainError):
        euler_alternating(0, 3)
    with pytest.raises(DomainError):
        euler_alternating(2, 1)
    with pytest.raises(DomainError):
        euler_classical(1)


def test_calibration_keeps_frozen_convention(ctx):
    assert calibrate_alternating_convention(ctx) == FROZEN_CONVENTION


def test_normalize_rewrites():
    assert normalize(Expression.symbol(eta(1))) == Expression.symbol(LOG2)
    assert normalize(Expression.symbol(eta(3))) == Expression.symbol(zeta(3), coeff=Fraction(3, 4))
    assert normalize(Expression.symbol(PI2)) == Expression.symbol(zeta(2), coeff=6)
    squared = Expression.symbol(zeta(2), 2)
    assert normalize(squared) == Expression.symbol(zeta(4), coeff=Fraction(5, 2))
    li2 = normalize(Expression.symbol(li_half(2)))
    assert format_expression(li2) == "1/2*zeta(2) - 1/2*log2^2"


def test_normalize_idempotent():
    e = Expression.symbol(li_half(3)) * Expression.symbol(PI2) + Expression.symbol(eta(5))
    once = normalize(e)
    assert normalize(once) == once


def test_normalize_preserves_value(ctx):
    e = Expression.symbol(li_half(3)) + Expression.symbol(PI2, 2) - Expression.symbol(eta(2))
    with mp.workdps(60):
        assert agree_digits(expr_eval(e, ctx), expr_eval(normalize(e), ctx), ctx) >= 30


def test_expression_arithmetic():
    e = Expression.symbol(zeta(3)) + Fraction(1, 2) * Expression.symbol(zeta(3))
    assert e == Expression.symbol(zeta(3), coeff=Fraction(3, 2))
    assert (e - e).is_zero()
    assert format_expression(Expression.zero()) == "0"
    assert format_expression(-Expression.constant(3)) == "-3"


def test_log_power_integral_closed():
    assert format_expression(log_power_integral_closed(1)) == "1/2*zeta(2)"
    with pytest.raises(DomainError):
        log_power_integral_closed(0)


@pytest.mark.parametrize("text", [
    "5/8*zeta(3)",
    "1/2*zeta(2) - 1/2*log2^2",
    "-1/12*log2*logpi - 3/4*gamma + logA",
    "catalan + 2*logG(1/3) - logGamma(5/6)",
    "7/2*eta(5) + Li(4,1/2)",
])
def test_parse_format_round_trip(text):
    assert format_expression(parse_expression(text)) == text


def test_parse_builds_symbols():
    e = parse_expression("gamma + 1/3*logG(1/4)")
    assert e == Expression.symbol(GAMMA) + Expression.symbol(log_g(Fraction(1, 4)), coeff=Fraction(1, 3))


@pytest.mark.parametrize("text", ["", "zeta(1)", "Li(2,1/3)", "foo", "3 +", "zeta(3) zeta(2)",
                                  "1/0*zeta(3)", "log2^0"])
def test_parse_errors(text):
    with pytest.raises(ExpressionSyntaxError):
        parse_expression(text)
