"""
Quadrature Module

Tanh-sinh (double exponential) quadrature on finite intervals with level
doubling, plus the catalog of named integrand families.
"""
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import mpmath
from mpmath import mp, mpf

from ..config.models import ElementaryFunction, Integrand, QuadratureResult
from ..config.settings import get_settings
from .errors import ConvergenceError, ParameterError, UnknownFamilyError
from .numkernel import PrecisionContext, elementary, to_mpf
from .specfun import loggamma, polylog

logger = logging.getLogger(__name__)

# (complement 1 - |u|, weight) for the nodes t = k h, k >= 0, added at one level
LevelNodes = List[Tuple[mpf, mpf]]

_node_lock = threading.Lock()
_node_cache: Dict[Tuple[int, int], LevelNodes] = {}


def _t_max(working_digits: int) -> float:
    # complement 2/(1 + e^(2v)) falls below 10^-(D+10) once v exceeds u
    u = (working_digits + 10) * math.log(10) / 2
    return math.asinh(2 * u / math.pi)


def _level_nodes(level: int, ctx: PrecisionContext) -> LevelNodes:
    """Nodes new at `level`: every k at level 0, odd k afterwards."""
    key = (level, ctx.working_digits)
    with _node_lock:
        cached = _node_cache.get(key)
    if cached is not None:
        return cached

    with ctx.workdps():
        h = mpf(2) ** (-level)
        half_pi = mp.pi / 2
        k_max = int(_t_max(ctx.working_digits) * 2 ** level) + 1
        ks = range(0, k_max + 1) if level == 0 else range(1, k_max + 1, 2)
        nodes: LevelNodes = []
        for k in ks:
            t = k * h
            v = half_pi * mp.sinh(t)
            complement = 2 / (1 + mp.exp(2 * v))
            weight = half_pi * mp.cosh(t) / mp.cosh(v) ** 2
            nodes.append((complement, weight))

    with _node_lock:
        _node_cache.setdefault(key, nodes)
    return nodes


def integrate_with_error(ig: Integrand, ctx: PrecisionContext) -> QuadratureResult:
    """
    Integrate over (a, b), halving the step until two levels agree.

    Convergence requires agreement to target_digits + margin; the last
    difference is the error estimate.

    Args:
        ig: Integrand with finite interval
        ctx: Precision context

    Returns:
        QuadratureResult

    Raises:
        ConvergenceError: No agreement after max_levels levels
    """
    cfg = get_settings().quadrature
    with ctx.workdps():
        a, b = to_mpf(ig.interval[0]), to_mpf(ig.interval[1])
        if not a < b:
            raise ValueError(f"integration interval must satisfy a < b, got ({a}, {b})")
        half = (b - a) / 2
        eps = ctx.epsilon()
        target = mpf(10) ** (-(ctx.target_digits + cfg.convergence_margin_digits))
        evaluations = 0

        def f_at(x: mpf) -> mpf:
            if x <= a:
                x = a + eps * max(abs(a), mpf(1))
            elif x >= b:
                x = b - eps * max(abs(b), mpf(1))
            return ig.f(x, ctx)

        def level_sum(level: int) -> mpf:
            nonlocal evaluations
            total = mpf(0)
            for complement, weight in _level_nodes(level, ctx):
                if complement == 1:
                    total += weight * f_at(a + half)
                    evaluations += 1
                    continue
                offset = half * complement
                total += weight * (f_at(a + offset) + f_at(b - offset))
                evaluations += 2
            return total

        trapezoid = level_sum(0)
        previous = half * trapezoid
        for level in range(1, cfg.max_levels + 1):
            h = mpf(2) ** (-level)
            trapezoid = trapezoid / 2 + h * level_sum(level)
            current = half * trapezoid
            diff = abs(current - previous)
            logger.debug(f"{ig.name or 'integrand'}: level {level}, "
                         f"difference {mpmath.nstr(diff, 3)}")
            if diff <= target * max(abs(current), mpf(1)):
                return QuadratureResult(current, diff, level, evaluations)
            previous = current
        raise ConvergenceError(
            f"{ig.name or 'integrand'}: no convergence after {cfg.max_levels} levels "
            f"(last difference {mpmath.nstr(diff, 5)})",
            estimates=(previous, current))


def integrate(ig: Integrand, ctx: PrecisionContext) -> mpf:
    """Integral value only; see integrate_with_error."""
    return integrate_with_error(ig, ctx).value


@dataclass(frozen=True)
class IntegrandFamily:
    """A named integrand parameterized by exact rationals."""
    name: str
    params: Tuple[str, ...]
    build: Callable[[Dict[str, Fraction]], Integrand]
    description: str = ""


def _log(x, ctx):
    return elementary(ElementaryFunction.LOG, x, ctx)


def _int_param(params: Dict[str, Fraction], name: str, minimum: int = 1) -> int:
    value = Fraction(params[name])
    if value.denominator != 1 or value < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {value}")
    return int(value)


def _harmonic_rep(params):
    n = _int_param(params, 'n')
    return Integrand(lambda x, ctx: (1 - x ** n) / (1 - x), (0, 1),
                     "removable at 1", f"harmonic-rep(n={n})")


def _skew_rep(params):
    n = _int_param(params, 'n')
    return Integrand(lambda x, ctx: (1 - (-x) ** n) / (1 + x), (0, 1),
                     "smooth", f"skew-rep(n={n})")


def _log_power_plus(params):
    q = _int_param(params, 'q')
    return Integrand(lambda x, ctx: mp.log1p(x) ** q / x, (0, 1),
                     "removable at 0", f"log-power-plus(q={q})")


def _log_power_minus(params):
    q = _int_param(params, 'q')
    return Integrand(lambda x, ctx: mp.log1p(-x) ** q / x, (0, 1),
                     "log^q singularity at 1", f"log-power-minus(q={q})")


def _atanh_log(params):
    return Integrand(
        lambda x, ctx: elementary(ElementaryFunction.ATANH, x, ctx) * mp.log1p(-x * x) / x,
        (0, 1), "log^2 singularity at 1", "atanh-log")


def _log_one_minus_square(params):
    return Integrand(lambda x, ctx: mp.log1p(-x * x) / x, (0, 1),
                     "log singularity at 1", "log-one-minus-square")


def _li4_neg(params):
    return Integrand(lambda x, ctx: polylog(4, -x, ctx) / (1 + x), (0, 1),
                     "smooth", "li4-neg")


def _log_li3_neg(params):
    return Integrand(lambda x, ctx: mp.log1p(x) * polylog(3, -x, ctx) / (1 + x), (0, 1),
                     "smooth", "log-li3-neg")


def _li2_neg_squared(params):
    return Integrand(lambda x, ctx: polylog(2, -x, ctx) ** 2 / (1 + x), (0, 1),
                     "smooth", "li2-neg-squared")


def _valean(params):
    return Integrand(lambda x, ctx: mp.log1p(x) ** 2 * polylog(2, -x, ctx) / x, (0, 1),
                     "removable at 0", "valean")


def _log_over_one_plus(params):
    return Integrand(lambda x, ctx: mp.log1p(x) / (1 + x), (0, 1),
                     "smooth", "log-over-one-plus")


def _log2_one_minus(params):
    return Integrand(lambda x, ctx: mp.log1p(-x) ** 2 / x, (0, 1),
                     "log^2 singularity at 1", "log2-one-minus")


def _loggamma(params):
    z = Fraction(params['z'])
    if z <= 0:
        raise ParameterError(f"z must be positive, got {z}")
    return Integrand(lambda t, ctx: loggamma(t, ctx), (0, z),
                     "log singularity at 0", f"loggamma(z={z})")


FAMILIES: Dict[str, IntegrandFamily] = {
    family.name: family for family in (
        IntegrandFamily('harmonic-rep', ('n',), _harmonic_rep, "(1 - x^n)/(1 - x) on (0, 1)"),
        IntegrandFamily('skew-rep', ('n',), _skew_rep, "(1 - (-x)^n)/(1 + x) on (0, 1)"),
        IntegrandFamily('log-power-plus', ('q',), _log_power_plus, "log^q(1 + x)/x on (0, 1)"),
        IntegrandFamily('log-power-minus', ('q',), _log_power_minus, "log^q(1 - x)/x on (0, 1)"),
        IntegrandFamily('atanh-log', (), _atanh_log, "atanh(x) log(1 - x^2)/x on (0, 1)"),
        IntegrandFamily('log-one-minus-square', (), _log_one_minus_square,
                        "log(1 - x^2)/x on (0, 1)"),
        IntegrandFamily('li4-neg', (), _li4_neg, "Li_4(-x)/(1 + x) on (0, 1)"),
        IntegrandFamily('log-li3-neg', (), _log_li3_neg, "log(1 + x) Li_3(-x)/(1 + x) on (0, 1)"),
        IntegrandFamily('li2-neg-squared', (), _li2_neg_squared, "Li_2(-x)^2/(1 + x) on (0, 1)"),
        IntegrandFamily('valean', (), _valean, "log^2(1 + x) Li_2(-x)/x on (0, 1)"),
        IntegrandFamily('log-over-one-plus', (), _log_over_one_plus,
                        "log(1 + x)/(1 + x) on (0, 1)"),
        IntegrandFamily('log2-one-minus', (), _log2_one_minus, "log^2(1 - x)/x on (0, 1)"),
        IntegrandFamily('loggamma', ('z',), _loggamma, "log Gamma(t) on (0, z)"),
    )
}


def get_family(name: str) -> IntegrandFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(f"unknown integrand family '{name}'")


def integrate_param_with_error(family: str, params: Dict[str, Fraction],
                               ctx: PrecisionContext) -> QuadratureResult:
    """Instantiate a named family and integrate it."""
    fam = get_family(family)
    missing = [p for p in fam.params if p not in params]
    if missing:
        raise ParameterError(f"{family}: missing parameter(s) {', '.join(missing)}")
    return integrate_with_error(fam.build(params), ctx)


def integrate_param(family: str, params: Dict[str, Fraction], ctx: PrecisionContext) -> mpf:
    """
    Integrate a named integrand family.

    Args:
        family: Name from FAMILIES, e.g. 'harmonic-rep'
        params: Exact parameter values, e.g. {'n': Fraction(5)}
        ctx: Precision context

    Returns:
        Integral value at working precision
    """
    return integrate_param_with_error(family, params, ctx).value
