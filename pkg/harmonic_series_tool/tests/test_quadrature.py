"""
Tests for tanh-sinh quadrature and the named integrand families.
"""
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from harmonic_series_tool.config.models import Integrand
from harmonic_series_tool.engine.errors import (ConvergenceError, ParameterError,
                                                UnknownFamilyError)
from harmonic_series_tool.engine.numkernel import agree_digits, make_context, to_mpf
from harmonic_series_tool.engine.quadrature import (FAMILIES, get_family, integrate,
                                                    integrate_param,
                                                    integrate_param_with_error,
                                                    integrate_with_error)
from harmonic_series_tool.engine.sequences import harmonic, skew_harmonic


def test_integrate_smooth(ctx):
    result = integrate_with_error(Integrand(lambda x, ctx: 1 / (1 + x * x), (0, 1)), ctx)
    with mp.workdps(60):
        assert agree_digits(result.value, mp.pi / 4, ctx) >= 30
    assert result.levels >= 1
    assert result.evaluations > 0


def test_integrate_endpoint_log_singularity(ctx):
    value = integrate(Integrand(lambda x, ctx: mp.log(x) * mp.log(1 - x), (0, 1)), ctx)
    with mp.workdps(60):
        assert agree_digits(value, 2 - mp.pi ** 2 / 6, ctx) >= 30


def test_integrate_rejects_empty_interval(ctx):
    with pytest.raises(ValueError):
        integrate(Integrand(lambda x, ctx: x, (1, 1)), ctx)


def test_integrate_reports_non_convergence(isolated_settings):
    isolated_settings.quadrature.max_levels = 2
    ctx = make_context(30)
    with pytest.raises(ConvergenceError):
        integrate(Integrand(lambda x, ctx: mp.sin(200 * x), (0, 1)), ctx)


@pytest.mark.parametrize("n", [1, 5, 20])
def test_harmonic_representations(ctx, n):
    with mp.workdps(60):
        value = integrate_param('harmonic-rep', {'n': Fraction(n)}, ctx)
        assert agree_digits(value, to_mpf(harmonic(n)), ctx) >= 30
        value = integrate_param('skew-rep', {'n': Fraction(n)}, ctx)
        assert agree_digits(value, to_mpf(skew_harmonic(n)), ctx) >= 30


@pytest.mark.parametrize("family,params,reference", [
    ('log-power-plus', {'q': Fraction(1)}, lambda: mp.pi ** 2 / 12),
    ('log-power-minus', {'q': Fraction(1)}, lambda: -mp.pi ** 2 / 6),
    ('log-one-minus-square', {}, lambda: -mp.pi ** 2 / 12),
    ('log-over-one-plus', {}, lambda: mp.ln2 ** 2 / 2),
    ('log2-one-minus', {}, lambda: 2 * mp.zeta(3)),
    ('atanh-log', {}, lambda: -7 * mp.zeta(3) / 8),
    ('loggamma', {'z': Fraction(1)}, lambda: mp.log(2 * mp.pi) / 2),
])
def test_family_values(ctx, family, params, reference):
    value = integrate_param(family, params, ctx)
    with mp.workdps(60):
        assert agree_digits(value, reference(), ctx) >= 30


def test_family_catalog():
    assert len(FAMILIES) == 13
    assert get_family('valean').params == ()
    with pytest.raises(UnknownFamilyError):
        get_family('no-such-family')


def test_family_parameter_errors(ctx):
    with pytest.raises(ParameterError):
        integrate_param_with_error('harmonic-rep', {}, ctx)
    with pytest.raises(ParameterError):
        integrate_param('harmonic-rep', {'n': Fraction(1, 2)}, ctx)
    with pytest.raises(ParameterError):
        integrate_param('loggamma', {'z': Fraction(-1)}, ctx)


def test_error_estimate_is_honest():
    low = make_context(25)
    result = integrate_param_with_error('valean', {}, low)
    high = integrate_param('valean', {}, make_context(40))
    with mp.workdps(80):
        assert abs(result.value - high) <= result.est_error + mpf(10) ** -(low.working_digits - 2)
