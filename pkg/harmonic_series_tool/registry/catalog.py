"""
Identity Catalog Module

Every identity the tool verifies: parameter schema, left- and right-hand
evaluation plans, parameter sweeps and citation. The two sides of a record
never share a closed-form shortcut; constants reach a left-hand side only
through the generic engines.
"""
import logging
import math
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from mpmath import mp, mpf

from ..config.models import (Citation, ConstantName, EvaluationPlan,
                             IdentityRecord, ParamKind, ParamSpec, Params,
                             SumMethod)
from ..engine.errors import ParameterError, UnknownIdentityError
from ..engine.eulersum import (GAMMA, LOG2, LOGA, LOGPI, PI2, Expression,
                               alternating_euler_series, euler_alternating,
                               euler_classical, li_half, log_g, log_gamma,
                               log_power_integral_closed, normalize, zeta)
from ..engine.numkernel import PrecisionContext, constant, to_mpf
from ..engine.sequences import (gf_tail_zeta2, gf_tail_zeta3_over_n, harmonic,
                                skew_harmonic)
from ..engine.series import power_tail_model
from ..engine.specfun import (QuarterKind, ein, loggamma, log_barnes_g,
                              negapolygamma2, polygamma, quarter_values,
                              riemann_zeta, zeta_prime_half, zeta_prime_neg1)
from . import summands
from .plans import (LOG_TAIL_CUTOFF, LOG_TAIL_MODEL, abel_plan, expression_plan,
                    fixed_expression_plan, formula_plan, quadrature_plan,
                    series_plan)

logger = logging.getLogger(__name__)

F = Fraction


def _c(value) -> Expression:
    return Expression.constant(value)


def _s(symbol, power: int = 1, coeff=1) -> Expression:
    return Expression.symbol(symbol, power, coeff)


def _int(name: str, default: int, minimum: int, maximum: Optional[int] = None,
         description: str = "") -> ParamSpec:
    return ParamSpec(name, ParamKind.INTEGER, F(default), F(minimum),
                     F(maximum) if maximum is not None else None, description=description)


def _positive_rational(name: str, default, description: str = "") -> ParamSpec:
    return ParamSpec(name, ParamKind.RATIONAL, F(default), F(0), exclusive_minimum=True,
                     description=description)


def _k(params: Params) -> int:
    return int(params['k'])


def _const(name: ConstantName, ctx: PrecisionContext) -> mpf:
    return constant(name, ctx)


# ---------------------------------------------------------------------------
# Euler sums
# ---------------------------------------------------------------------------

def _classical_lhs():
    def evaluate(params, ctx):
        k = _k(params)
        model = power_tail_model(k + 6, with_logs=True, min_exponent=k - 1)
        return series_plan(lambda p: summands.classical_euler(k), SumMethod.ASYMPTOTIC_TAIL,
                           cutoff=LOG_TAIL_CUTOFF // 2, tail_model=model).evaluate(params, ctx)
    return EvaluationPlan(SumMethod.ASYMPTOTIC_TAIL, evaluate, "sum H_n / n^k")


def _odd_weight(params: Params) -> Optional[str]:
    if (params['p'] + params['q']) % 2 == 0:
        return "p + q must be odd"
    return None


_EULER_ALT_SWEEP = tuple(
    {'p': F(p), 'q': F(q)}
    for weight in (3, 5, 7, 9) for p in range(1, weight - 1) for q in (weight - p,)
    if q >= 2)


# ---------------------------------------------------------------------------
# Harmonic series with zeta tails
# ---------------------------------------------------------------------------

S1_CLOSED = _s(LOG2) - _s(zeta(3), coeff=F(7, 8)) - _c(1)

TAIL2_SKEW_CLOSED = (_s(PI2, 2, F(53, 1440)) + _s(PI2, coeff=F(1, 4)) * _s(LOG2, 2)
                     - _s(LOG2, 4, F(1, 8)) - _s(LOG2, coeff=F(21, 8)) * _s(zeta(3))
                     - _s(li_half(4), coeff=3))

S2_CLOSED = (_s(zeta(5), coeff=F(193, 64)) - _s(zeta(2), coeff=F(5, 16)) * _s(zeta(3))
             - _s(LOG2, 5, F(1, 15)) + _s(LOG2, 3, F(1, 3)) * _s(zeta(2))
             - _s(LOG2, coeff=F(15, 16)) * _s(zeta(4))
             - _s(LOG2, coeff=2) * _s(li_half(4)) - _s(li_half(5), coeff=2))

LI4_NEG_CLOSED = (_s(zeta(5), coeff=F(17, 16)) - _s(zeta(2), coeff=F(3, 8)) * _s(zeta(3))
                  - _s(LOG2, coeff=F(7, 8)) * _s(zeta(4)))

VALEAN_CLOSED = (_s(LOG2, 5, F(2, 15)) - _s(LOG2, 3, F(2, 3)) * _s(zeta(2))
                 + _s(LOG2, 2, F(7, 4)) * _s(zeta(3)) - _s(zeta(2), coeff=F(1, 8)) * _s(zeta(3))
                 - _s(zeta(5), coeff=F(125, 32)) + _s(LOG2, coeff=4) * _s(li_half(4))
                 + _s(li_half(5), coeff=4))

LOG_LI3_CLOSED = (_s(zeta(2), coeff=F(1, 16)) * _s(zeta(3)) + _s(zeta(5), coeff=F(125, 64))
                  - _s(LOG2, 5, F(1, 15)) + _s(LOG2, 3, F(1, 3)) * _s(zeta(2))
                  - _s(LOG2, 2, F(5, 4)) * _s(zeta(3)) - _s(LOG2, coeff=2) * _s(li_half(4))
                  - _s(li_half(5), coeff=2))

LI2_SQUARED_CLOSED = (_s(LOG2, 5, F(4, 15)) - _s(LOG2, 3, F(4, 3)) * _s(zeta(2))
                      + _s(LOG2, 2, F(7, 2)) * _s(zeta(3)) + _s(LOG2, coeff=F(5, 8)) * _s(zeta(4))
                      - _s(zeta(5), coeff=F(125, 16)) - _s(zeta(2), coeff=F(1, 4)) * _s(zeta(3))
                      + _s(LOG2, coeff=8) * _s(li_half(4)) + _s(li_half(5), coeff=8))


def _tail2_sum_closed(params: Params) -> Expression:
    k = _k(params)
    return _c(harmonic(k + 1) + F(k, k + 1)) - _s(zeta(2))


def _gf_tail3_lhs():
    direct = series_plan(lambda p: summands.gf_tail3_series(p['x']), SumMethod.DIRECT)
    tail = series_plan(lambda p: summands.gf_tail3_series(p['x']), SumMethod.ASYMPTOTIC_TAIL)

    def evaluate(params, ctx):
        plan = tail if abs(params['x']) == 1 else direct
        return plan.evaluate(params, ctx)

    return EvaluationPlan(SumMethod.DIRECT, evaluate,
                      "sum (zeta(3) - H_n^(3)) x^n / n (asymptotic tail at |x| = 1)")


_GF_SWEEP = tuple({'x': x} for x in (F(-9, 10), F(-1, 2), F(0), F(1, 2), F(9, 10)))


def _dilog_reflection(params: Params, ctx: PrecisionContext) -> mpf:
    x = to_mpf(params['x'])
    return riemann_zeta(2, ctx) - mp.log(x) * mp.log1p(-x)


# ---------------------------------------------------------------------------
# Exponential tails
# ---------------------------------------------------------------------------

def _exp_tail_harmonic_closed(params: Params, ctx: PrecisionContext) -> mpf:
    # Exchanging the sums gives y sum_m y^m/m! (H_(m+1) - 1); the Ein term carries a factor y
    y = to_mpf(params['y'])
    return mp.exp(y) * (y * ein(params['y'], ctx) - y + 1) - 1


def _exp_tail_skew_closed(params: Params, ctx: PrecisionContext) -> mpf:
    y = to_mpf(params['y'])
    return y * mp.exp(y) * (ein(2 * params['y'], ctx) - ein(params['y'], ctx)) - mp.cosh(y) + 1


def _frac_ne_closed(params: Params, ctx: PrecisionContext) -> mpf:
    gamma = _const(ConstantName.EULER_GAMMA, ctx)
    delta = _const(ConstantName.EULER_GOMPERTZ, ctx)
    return mp.e * (ein(2, ctx) - gamma) - mp.cosh(1) - delta + 1


# ---------------------------------------------------------------------------
# Hardy series
# ---------------------------------------------------------------------------

_HARDY_GRID = tuple({'k': F(k), 'x': x}
                    for k, x in product((1, 2, 3), (F(1, 2), F(1), F(2), F(7, 2))))

_HARDY_N_SWEEP = tuple({'x': x} for x in (F(1, 2), F(2, 3), F(1), F(3, 2), F(3)))


def _hardy_alt_closed(params: Params) -> Expression:
    k, x = _k(params), params['x']
    return (_s(GAMMA, coeff=F(1, 2)) + _s(log_gamma((x + k) / 2), coeff=F(1, k))
            - _s(log_gamma(x / 2), coeff=F(1, k)))


def _hardy_alt_abel(params: Params):
    k, x = _k(params), params['x']
    return (summands.alternating_unit(), summands.hardy_correction(k, x),
            summands.alternating_unit_partial_sum)


def _hardy_pos_closed(params: Params) -> Expression:
    k, x = _k(params), params['x']
    return (_s(GAMMA, coeff=x + F(k, 2) - 1) + _c(F(1, 2)) - _s(LOG2, coeff=F(1, 2))
            - _s(LOGPI, coeff=F(1, 2)) + _s(log_g(x + k), coeff=F(1, k))
            - _s(log_g(x), coeff=F(1, k)))


HARDY_N_BASE_CLOSED = (_s(GAMMA, coeff=F(1, 4)) + _c(F(1, 4)) + _s(LOG2, coeff=F(7, 12))
                       - _s(LOGA, coeff=3))


def _hardy_n_closed(params: Params) -> Expression:
    x = params['x']
    return (_s(GAMMA, coeff=F(1, 4)) - _c(x / 2) + _s(LOG2, coeff=F(1, 2)) + _c(F(1, 2))
            - _s(log_g((x + 1) / 2), coeff=2) + _s(log_g(x / 2), coeff=2)
            + _s(log_gamma(x / 2)))


def _hardy_n_negapolygamma(params: Params, ctx: PrecisionContext) -> mpf:
    # base series minus sum (-1)^n n [log(1 + (x-1)/n) - (x-1)/n]
    x = params['x']
    gamma = _const(ConstantName.EULER_GAMMA, ctx)
    pi = _const(ConstantName.PI, ctx)
    xm = to_mpf(x)
    gamma_ratio = loggamma((x + 1) / 2, ctx) - loggamma(x / 2, ctx)
    return ((gamma + 1) / 4 - mp.log(pi) / 2 - (xm - 1) * gamma_ratio
            + 2 * (negapolygamma2((x + 1) / 2, ctx) - negapolygamma2(x / 2, ctx)))


def _catalan_closed(params: Params, ctx: PrecisionContext) -> mpf:
    gamma = _const(ConstantName.EULER_GAMMA, ctx)
    pi = _const(ConstantName.PI, ctx)
    g = _const(ConstantName.CATALAN, ctx)
    lemniscate = _const(ConstantName.LEMNISCATE, ctx)
    return (gamma + 1) / 4 - g / pi - mp.log(lemniscate ** 2 / pi) / 4


def _gieseking_closed(params: Params, ctx: PrecisionContext) -> mpf:
    gamma = _const(ConstantName.EULER_GAMMA, ctx)
    pi = _const(ConstantName.PI, ctx)
    kappa = _const(ConstantName.GIESEKING, ctx)
    log_a = mp.log(_const(ConstantName.GLAISHER, ctx))
    return ((gamma + 1) / 4 - 5 * kappa / (6 * pi) - log_a + mpf(19) / 36 * mp.ln2
            + mp.log(3) / 24 + (loggamma(F(5, 6), ctx) - loggamma(F(1, 3), ctx)) / 3)


# ---------------------------------------------------------------------------
# Gamma, Barnes G and Hurwitz zeta special values
# ---------------------------------------------------------------------------

def _digamma_alt_closed(params: Params, ctx: PrecisionContext) -> mpf:
    z = params['z']
    return (polygamma(0, (z + 1) / 2, ctx) - polygamma(0, z / 2, ctx)) / 2


def _zeta_prime_via_barnes(a: Fraction, ctx: PrecisionContext) -> mpf:
    # zeta'(-1, a) = zeta'(-1) - log G(a) - (1 - a) log Gamma(a)
    return zeta_prime_neg1(ctx) - log_barnes_g(a, ctx) - (1 - to_mpf(a)) * loggamma(a, ctx)


def _quarter_constraint(params: Params) -> Optional[str]:
    if params['a'] not in (F(1, 4), F(3, 4)):
        return "a must be 1/4 or 3/4"
    return None


def _barnes_quarter_closed(params: Params, ctx: PrecisionContext) -> mpf:
    pi = _const(ConstantName.PI, ctx)
    g = _const(ConstantName.CATALAN, ctx)
    return g / (2 * pi) - mp.ln2 / 8 - mp.log(pi) / 4 + loggamma(F(1, 4), ctx)


def _trigamma_third(ctx: PrecisionContext) -> mpf:
    # psi'(1/3) = 2 sqrt(3) kappa + 2 pi^2 / 3
    kappa = _const(ConstantName.GIESEKING, ctx)
    pi = _const(ConstantName.PI, ctx)
    return 2 * mp.sqrt(3) * kappa + 2 * pi ** 2 / 3


def _barnes_third_closed(params: Params, ctx: PrecisionContext) -> mpf:
    pi = _const(ConstantName.PI, ctx)
    log_a = mp.log(_const(ConstantName.GLAISHER, ctx))
    sqrt3 = mp.sqrt(3)
    return (mp.log(3) / 72 + pi / (18 * sqrt3) - 2 * loggamma(F(1, 3), ctx) / 3
            - 4 * log_a / 3 - _trigamma_third(ctx) / (12 * pi * sqrt3) + mpf(1) / 9)


def _barnes_five_sixths_closed(params: Params, ctx: PrecisionContext) -> mpf:
    pi = _const(ConstantName.PI, ctx)
    log_a = mp.log(_const(ConstantName.GLAISHER, ctx))
    sqrt3 = mp.sqrt(3)
    trigamma = 16 * pi ** 2 / 3 - 5 * _trigamma_third(ctx)
    return (-mp.log(12) / 144 + pi / (20 * sqrt3) - loggamma(F(5, 6), ctx) / 6
            - 5 * log_a / 6 - trigamma / (40 * pi * sqrt3) + mpf(5) / 72)


def _lemniscate_from_gamma(params: Params, ctx: PrecisionContext) -> mpf:
    pi = _const(ConstantName.PI, ctx)
    return mp.exp(2 * loggamma(F(1, 4), ctx)) / (2 * mp.sqrt(2 * pi))


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

_EULER = "Euler sums"
_INTEGRALS = "Integral lemmas"
_TAILS = "Harmonic series with tails"
_EXP = "Exponential tails"
_HARDY = "Hardy series"
_SPECIAL = "Special values"


def _build_records() -> List[IdentityRecord]:
    records = [
        # Euler sums
        IdentityRecord(
            id='EULER_CLASSICAL',
            title="sum H_n / n^k = (1 + k/2) zeta(k+1) - 1/2 sum zeta(k-n) zeta(n+1)",
            params=(_int('k', 2, 2, description="power of n"),),
            lhs=_classical_lhs(),
            rhs=expression_plan(lambda p: euler_classical(_k(p)), "Euler's classical formula"),
            citation=Citation(_EULER, "Euler's closed form for linear Euler sums",
                              "Leonhard Euler famously derived"),
            sweep=tuple({'k': F(k)} for k in range(2, 7)),
        ),
        IdentityRecord(
            id='EULER_ALT',
            title="sum (-1)^(n-1) H_n^(p) / n^q for p + q odd",
            params=(_int('p', 1, 1, description="harmonic order"),
                    _int('q', 2, 2, description="power of n")),
            lhs=series_plan(lambda p: alternating_euler_series(int(p['p']), int(p['q'])),
                            SumMethod.ALTERNATING_ACCEL, description="CVZ acceleration"),
            rhs=expression_plan(lambda p: euler_alternating(int(p['p']), int(p['q'])),
                                "alternating Euler sum formula"),
            citation=Citation(_EULER, "Closed form of alternating Euler sums of odd weight",
                              "p+q is odd"),
            sweep=_EULER_ALT_SWEEP,
            constraint=_odd_weight,
        ),

        # Integral representations and lemmas
        IdentityRecord(
            id='HARMONIC_REP',
            title="H_n = int_0^1 (1 - x^n)/(1 - x) dx",
            params=(_int('n', 5, 1),),
            lhs=formula_plan(lambda p, ctx: to_mpf(harmonic(int(p['n']))), "exact H_n"),
            rhs=quadrature_plan('harmonic-rep'),
            citation=Citation(_INTEGRALS, "Euler's integral representation of H_n",
                              "integral representations of the harmonic and skew-harmonic numbers"),
            sweep=({'n': F(1)}, {'n': F(20)}),
        ),
        IdentityRecord(
            id='SKEW_REP',
            title="skew H_n = int_0^1 (1 - (-x)^n)/(1 + x) dx",
            params=(_int('n', 5, 1),),
            lhs=formula_plan(lambda p, ctx: to_mpf(skew_harmonic(int(p['n']))),
                             "exact skew-harmonic number"),
            rhs=quadrature_plan('skew-rep'),
            citation=Citation(_INTEGRALS, "Integral representation of skew-harmonic numbers",
                              "integral representations of the harmonic and skew-harmonic numbers"),
            sweep=({'n': F(1)}, {'n': F(20)}),
        ),
        IdentityRecord(
            id='LEMMA_ATANH',
            title="int_0^1 atanh(x) log(1 - x^2)/x dx = -7/8 zeta(3)",
            params=(),
            lhs=quadrature_plan('atanh-log'),
            rhs=fixed_expression_plan(_s(zeta(3), coeff=F(-7, 8))),
            citation=Citation(_INTEGRALS, "Inverse hyperbolic tangent log integral",
                              "the inverse hyperbolic tangent function"),
        ),
        IdentityRecord(
            id='LOGPOW_PLUS',
            title="int_0^1 log^q(1 + x)/x dx in zeta values, log 2 and Li_k(1/2)",
            params=(_int('q', 2, 1),),
            lhs=quadrature_plan('log-power-plus'),
            rhs=expression_plan(lambda p: log_power_integral_closed(int(p['q'])),
                                "log-power integral closed form"),
            citation=Citation(_INTEGRALS, "General log-power integral over (0, 1)",
                              "we make use of the following identity"),
            sweep=tuple({'q': F(q)} for q in (1, 3, 4)),
        ),
        IdentityRecord(
            id='LOGPOW_MINUS',
            title="int_0^1 log^q(1 - x)/x dx = (-1)^q q! zeta(q+1)",
            params=(_int('q', 3, 1),),
            lhs=quadrature_plan('log-power-minus'),
            rhs=expression_plan(
                lambda p: _s(zeta(int(p['q']) + 1),
                             coeff=(-1) ** int(p['q']) * math.factorial(int(p["q"])))),
            citation=Citation(_INTEGRALS, "Substitution x -> 1 - e^(-t) and the Bose integral",
                              "integrate by substituting x ↦ 1 − e^{−x}"),
            sweep=tuple({'q': F(q)} for q in (1, 2, 4)),
        ),
        IdentityRecord(
            id='LOG2_1MX',
            title="int_0^1 log^2(1 - x)/x dx = 2 zeta(3)",
            params=(),
            lhs=quadrature_plan('log2-one-minus'),
            rhs=fixed_expression_plan(_s(zeta(3), coeff=2)),
            citation=Citation(_INTEGRALS, "Squared log integral",
                              "∫₀¹ log²(1−x)/x dx = 2ζ(3)"),
        ),
        IdentityRecord(
            id='LEMMA_LOG',
            title="int_0^1 log(1 - x^2)/x dx = -pi^2/12",
            params=(),
            lhs=quadrature_plan('log-one-minus-square'),
            rhs=fixed_expression_plan(_s(PI2, coeff=F(-1, 12))),
            citation=Citation(_INTEGRALS, "Substitution x -> sqrt(x) and Li_2(1)",
                              "Integrate by substituting"),
        ),
        IdentityRecord(
            id='LOG_PLUS_OVER_PLUS',
            title="int_0^1 log(1 + x)/(1 + x) dx = log^2(2)/2",
            params=(),
            lhs=quadrature_plan('log-over-one-plus'),
            rhs=fixed_expression_plan(_s(LOG2, 2, F(1, 2))),
            citation=Citation(_INTEGRALS, "Elementary antiderivative log^2(1 + x)/2",
                              "∫₀¹ log(1+x)/(1+x) dx = log²(2)/2"),
        ),
        IdentityRecord(
            id='LEMMA_LI4',
            title="int_0^1 Li_4(-x)/(1 + x) dx",
            params=(),
            lhs=quadrature_plan('li4-neg'),
            rhs=fixed_expression_plan(LI4_NEG_CLOSED),
            citation=Citation(_INTEGRALS, "Integration by parts against log(1 + x)",
                              "17/16 ζ(5)"),
        ),
        IdentityRecord(
            id='VALEAN_INT',
            title="int_0^1 log^2(1 + x) Li_2(-x)/x dx",
            params=(),
            lhs=quadrature_plan('valean'),
            rhs=fixed_expression_plan(VALEAN_CLOSED),
            citation=Citation(_INTEGRALS, "Log-squared dilogarithm integral",
                              "due to Vălean"),
        ),
        IdentityRecord(
            id='LEMMA_LOG_LI3',
            title="int_0^1 log(1 + x) Li_3(-x)/(1 + x) dx",
            params=(),
            lhs=quadrature_plan('log-li3-neg'),
            rhs=fixed_expression_plan(LOG_LI3_CLOSED),
            citation=Citation(_INTEGRALS, "Integration by parts reducing to the log-squared dilogarithm integral",
                              "125/64 ζ(5)"),
        ),
        IdentityRecord(
            id='LEMMA_LI2SQ',
            title="int_0^1 Li_2(-x)^2/(1 + x) dx",
            params=(),
            lhs=quadrature_plan('li2-neg-squared'),
            rhs=fixed_expression_plan(LI2_SQUARED_CLOSED),
            citation=Citation(_INTEGRALS, "Integration by parts with zeta(2)^2 = 5/2 zeta(4)",
                              "125/16 ζ(5)"),
        ),

        # Harmonic series with zeta tails
        IdentityRecord(
            id='THM_S1',
            title="sum H_(2n) (zeta(2) - H_n^(2) - 1/n) = log 2 - 7/8 zeta(3) - 1",
            params=(),
            lhs=series_plan(lambda p: summands.s1_series(), SumMethod.ASYMPTOTIC_TAIL,
                            cutoff=LOG_TAIL_CUTOFF, tail_model=LOG_TAIL_MODEL),
            rhs=fixed_expression_plan(S1_CLOSED),
            citation=Citation(_TAILS, "Harmonic numbers of even index against a zeta(2) tail",
                              "log(2) − 7/8 ζ(3) − 1"),
            default_digits=20,
        ),
        IdentityRecord(
            id='TAIL2_SUM',
            title="sum (zeta(2) - H_n^(2) - 1/(n + k)) = H_(k+1) + k/(k+1) - zeta(2)",
            params=(_int('k', 0, 0),),
            lhs=series_plan(lambda p: summands.tail2_shifted(_k(p)), SumMethod.ASYMPTOTIC_TAIL),
            rhs=expression_plan(_tail2_sum_closed),
            citation=Citation(_TAILS, "Telescoping sum of zeta(2) tails",
                              "H_{k+1} + k/(k+1) − ζ(2)"),
            sweep=({'k': F(1)}, {'k': F(2)}),
        ),
        IdentityRecord(
            id='TAIL2_HARMONIC',
            title="sum H_n (zeta(2) - H_n^(2) - 1/n) = -1",
            params=(),
            lhs=series_plan(lambda p: summands.tail2_harmonic(), SumMethod.ASYMPTOTIC_TAIL,
                            cutoff=LOG_TAIL_CUTOFF, tail_model=LOG_TAIL_MODEL),
            rhs=fixed_expression_plan(_c(-1)),
            citation=Citation(_TAILS, "Harmonic series with a corrected zeta(2) tail",
                              "the following harmonic series with tail of ζ(2)"),
        ),
        IdentityRecord(
            id='TAIL2_SKEW',
            title="sum skew H_n (zeta(2) - H_n^(2))/n",
            params=(),
            lhs=series_plan(lambda p: summands.skew_tail_over_n(2), SumMethod.ASYMPTOTIC_TAIL),
            rhs=fixed_expression_plan(TAIL2_SKEW_CLOSED),
            citation=Citation(_TAILS, "Skew-harmonic series with a zeta(2) tail",
                              "another harmonic series with a tail of ζ(2)"),
        ),
        IdentityRecord(
            id='THM_S2',
            title="sum skew H_n (zeta(3) - H_n^(3))/n",
            params=(),
            lhs=series_plan(lambda p: summands.skew_tail_over_n(3), SumMethod.ASYMPTOTIC_TAIL),
            rhs=fixed_expression_plan(S2_CLOSED),
            citation=Citation(_TAILS, "Skew-harmonic series with a zeta(3) tail",
                              "Plugging in the integral representation"),
        ),
        IdentityRecord(
            id='GF_TAIL2',
            title="sum (zeta(2) - H_n^(2)) x^n = (x zeta(2) - Li_2(x))/(1 - x)",
            params=(ParamSpec('x', ParamKind.RATIONAL, F(1, 2), F(-1), F(99, 100),
                              exclusive_minimum=True),),
            lhs=series_plan(lambda p: summands.gf_tail2_series(p['x']), SumMethod.DIRECT),
            rhs=formula_plan(lambda p, ctx: gf_tail_zeta2(p['x'], ctx),
                             "(x zeta(2) - Li_2(x))/(1 - x)"),
            citation=Citation(_TAILS, "Generating function of zeta(2) tails",
                              "x ζ(2) − Li₂(x)"),
            sweep=_GF_SWEEP,
        ),
        IdentityRecord(
            id='GF_TAIL3',
            title="sum (zeta(3) - H_n^(3)) x^n / n",
            params=(ParamSpec('x', ParamKind.RATIONAL, F(1, 2), F(-1), F(1)),),
            lhs=_gf_tail3_lhs(),
            rhs=formula_plan(lambda p, ctx: gf_tail_zeta3_over_n(p['x'], ctx),
                             "log(1-x)(Li_3(x) - zeta(3)) - Li_4(x) + Li_2(x)^2/2"),
            citation=Citation(_TAILS, "Generating function of zeta(3) tails over n",
                              "ζ(4)/4 if x = 1"),
            sweep=_GF_SWEEP + ({'x': F(1)},),
        ),
        IdentityRecord(
            id='DILOG_REFLECT',
            title="Li_2(x) + Li_2(1 - x) = zeta(2) - log(x) log(1 - x)",
            params=(ParamSpec('x', ParamKind.RATIONAL, F(1, 3), F(0), F(99, 100),
                              exclusive_minimum=True),),
            lhs=series_plan(lambda p: summands.dilog_pair_series(p['x']), SumMethod.DIRECT,
                            description="both power series summed directly"),
            rhs=formula_plan(_dilog_reflection),
            citation=Citation(_TAILS, "Dilogarithm reflection formula",
                              "the dilogarithm satisfies the functional equation"),
            sweep=({'x': F(1, 10)}, {'x': F(1, 2)}),
        ),
        IdentityRecord(
            id='LI_HALF',
            title="Li_2(1/2) and Li_3(1/2) in zeta values and log 2",
            params=(_int('s', 2, 2, 3),),
            lhs=series_plan(lambda p: summands.polylog_half_series(int(p['s'])), SumMethod.DIRECT),
            rhs=expression_plan(lambda p: normalize(_s(li_half(int(p['s']))))),
            citation=Citation(_TAILS, "Special values of the polylogarithm at 1/2",
                              "special values of the polylogarithms"),
            sweep=({'s': F(3)},),
        ),

        # Exponential tails
        IdentityRecord(
            id='EXP_TAIL_H',
            title="sum H_n (e^y - sum_{j<=n} y^j/j!) = e^y (y Ein(y) - y + 1) - 1",
            params=(ParamSpec('y', ParamKind.RATIONAL, F(1)),),
            lhs=series_plan(lambda p: summands.exp_tail_weighted(p['y'], skew=False),
                            SumMethod.DIRECT),
            rhs=formula_plan(_exp_tail_harmonic_closed, "e^y (y Ein(y) - y + 1) - 1"),
            citation=Citation(_EXP, "Harmonic series with an exponential tail",
                              "e^y(Ein(y) − y + 1) − 1"),
            sweep=({'y': F(-1)}, {'y': F(2)}),
        ),
        IdentityRecord(
            id='THM_EXP_TAIL_SKEW',
            title="sum skew H_n (e^y - sum_{j<=n} y^j/j!) = y e^y [Ein(2y) - Ein(y)] - cosh y + 1",
            params=(ParamSpec('y', ParamKind.RATIONAL, F(1)),),
            lhs=series_plan(lambda p: summands.exp_tail_weighted(p['y'], skew=True),
                            SumMethod.DIRECT),
            rhs=formula_plan(_exp_tail_skew_closed, "y e^y [Ein(2y) - Ein(y)] - cosh y + 1"),
            citation=Citation(_EXP, "Skew-harmonic series with an exponential tail",
                              "the series evaluates to 0"),
            default_digits=30,
            sweep=tuple({'y': y} for y in (F(-2), F(-1, 2), F(0), F(3))),
        ),
        IdentityRecord(
            id='COR_FRAC_NE',
            title="sum skew H_n {n! e}/n! = e [Ein(2) - gamma] - cosh 1 - delta + 1",
            params=(),
            lhs=series_plan(lambda p: summands.frac_ne_skew(), SumMethod.DIRECT),
            rhs=formula_plan(_frac_ne_closed),
            citation=Citation(_EXP, "Fractional parts of n! e and the Euler-Gompertz constant",
                              "denotes the fractional part"),
            default_digits=30,
        ),

        # Hardy series
        IdentityRecord(
            id='HARDY_BASE_ALT',
            title="sum (-1)^n (H_n - log n - gamma) = (gamma - log pi)/2",
            params=(),
            lhs=series_plan(lambda p: summands.hardy_alternating(1, F(1)),
                            SumMethod.ALTERNATING_ACCEL),
            rhs=fixed_expression_plan(_s(GAMMA, coeff=F(1, 2)) - _s(LOGPI, coeff=F(1, 2))),
            citation=Citation(_HARDY, "Hardy's alternating series",
                              "Hardy derived the alternating Hardy series"),
        ),
        IdentityRecord(
            id='THM_HARDY_ALT',
            title="sum (-1)^n (H_n - (1/k) log (n+x-1)^(rising k) - gamma)",
            params=(_int('k', 1, 1), _positive_rational('x', 1)),
            lhs=series_plan(lambda p: summands.hardy_alternating(_k(p), p['x']),
                            SumMethod.ALTERNATING_ACCEL),
            rhs=expression_plan(_hardy_alt_closed,
                                "gamma/2 + (1/k) log[Gamma((x+k)/2) / Gamma(x/2)]"),
            citation=Citation(_HARDY, "Pochhammer generalization of the alternating Hardy series",
                              "denotes the Pochhammer symbol"),
            lhs_alternatives=(abel_plan(_hardy_alt_abel,
                                        description="Abel summation with a_n = (-1)^n"),),
            sweep=_HARDY_GRID,
        ),
        IdentityRecord(
            id='COR_HARDY_ALT_I',
            title="sum (-1)^n (H_n - (1/k) log n^(rising k) - gamma)",
            params=(_int('k', 2, 1),),
            lhs=series_plan(lambda p: summands.hardy_alternating(_k(p), F(1)),
                            SumMethod.ALTERNATING_ACCEL),
            rhs=expression_plan(
                lambda p: (_s(GAMMA, coeff=F(1, 2)) - _s(LOGPI, coeff=F(1, 2 * _k(p)))
                           + _s(log_gamma(F(_k(p) + 1, 2)), coeff=F(1, _k(p))))),
            citation=Citation(_HARDY, "Alternating Hardy series at x = 1",
                              "by letting x = 1 … and simplifying"),
            sweep=({'k': F(1)}, {'k': F(3)}),
        ),
        IdentityRecord(
            id='COR_HARDY_ALT_II',
            title="sum (-1)^n (H_n - log(n + x - 1) - gamma)",
            params=(_positive_rational('x', F(1, 3)),),
            lhs=series_plan(lambda p: summands.hardy_alternating(1, p['x']),
                            SumMethod.ALTERNATING_ACCEL),
            rhs=expression_plan(
                lambda p: (_s(GAMMA, coeff=F(1, 2)) + _s(log_gamma((p['x'] + 1) / 2))
                           - _s(log_gamma(p['x'] / 2)))),
            citation=Citation(_HARDY, "Alternating Hardy series at k = 1",
                              "by letting x = 1 … and simplifying"),
            sweep=({'x': F(5, 2)},),
        ),
        IdentityRecord(
            id='HARDY_BASE_POS',
            title="sum (H_n - log n - gamma - 1/(2n)) = (gamma + 1 - log 2 pi)/2",
            params=(),
            lhs=series_plan(lambda p: summands.hardy_positive(1, F(1)), SumMethod.ASYMPTOTIC_TAIL),
            rhs=fixed_expression_plan(_s(GAMMA, coeff=F(1, 2)) + _c(F(1, 2))
                                      - _s(LOG2, coeff=F(1, 2)) - _s(LOGPI, coeff=F(1, 2))),
            citation=Citation(_HARDY, "Corrected positive Hardy series",
                              "(γ + 1 − log(2π))/2"),
        ),
        IdentityRecord(
            id='THM_HARDY_POS',
            title="sum (H_n - (1/k) log (n+x-1)^(rising k) - gamma + (x-2)/n + k/(2n))",
            params=(_int('k', 1, 1), _positive_rational('x', 1)),
            lhs=series_plan(lambda p: summands.hardy_positive(_k(p), p['x']),
                            SumMethod.ASYMPTOTIC_TAIL),
            rhs=expression_plan(_hardy_pos_closed,
                                "gamma (x + k/2 - 1) + (1 - log 2 pi)/2 + (1/k) log[G(x+k)/G(x)]"),
            citation=Citation(_HARDY, "Positive Hardy series and the Barnes G function",
                              "denotes the Barnes G-function"),
            sweep=_HARDY_GRID,
        ),
        IdentityRecord(
            id='COR_HARDY_POS_I',
            title="sum (H_n - (1/k) log n^(rising k) - gamma + (k-2)/(2n))",
            params=(_int('k', 2, 1),),
            lhs=series_plan(lambda p: summands.hardy_positive(_k(p), F(1)),
                            SumMethod.ASYMPTOTIC_TAIL),
            rhs=expression_plan(
                lambda p: (_s(GAMMA, coeff=F(_k(p), 2)) + _c(F(1, 2)) - _s(LOG2, coeff=F(1, 2))
                           - _s(LOGPI, coeff=F(1, 2)) + _s(log_g(_k(p) + 1), coeff=F(1, _k(p))))),
            citation=Citation(_HARDY, "Positive Hardy series at x = 1",
                              "immediately follows from setting x = 1"),
            sweep=({'k': F(1)}, {'k': F(3)}),
        ),
        IdentityRecord(
            id='COR_HARDY_POS_II',
            title="sum (H_n - log(n + x - 1) - gamma + x/n - 3/(2n))",
            params=(_positive_rational('x', F(1, 2)),),
            lhs=series_plan(lambda p: summands.hardy_positive(1, p['x']),
                            SumMethod.ASYMPTOTIC_TAIL),
            rhs=expression_plan(
                lambda p: (_s(GAMMA, coeff=p['x']) + _s(log_gamma(p['x'])) + _c(F(1, 2))
                           - _s(GAMMA, coeff=F(1, 2)) - _s(LOG2, coeff=F(1, 2))
                           - _s(LOGPI, coeff=F(1, 2)))),
            citation=Citation(_HARDY, "Positive Hardy series at k = 1",
                              "immediately follows from setting x = 1"),
            sweep=({'x': F(1)}, {'x': F(2)}),
        ),
        IdentityRecord(
            id='HARDY_N_BASE',
            title="sum (-1)^n n (H_n - log n - gamma - 1/(2n)) = (gamma+1)/4 + 7/12 log 2 - 3 log A",
            params=(),
            lhs=series_plan(lambda p: summands.hardy_weighted(F(1)), SumMethod.ALTERNATING_ACCEL),
            rhs=fixed_expression_plan(HARDY_N_BASE_CLOSED),
            citation=Citation(_HARDY, "n-weighted alternating Hardy series and Glaisher's constant",
                              "Glaisher-Kinkelin constant"),
        ),
        IdentityRecord(
            id='THM_HARDY_N',
            title="sum (-1)^n n (H_n - log(n + x - 1) - gamma + x/n - 3/(2n))",
            params=(_positive_rational('x', 1),),
            lhs=series_plan(lambda p: summands.hardy_weighted(p['x']), SumMethod.ALTERNATING_ACCEL),
            rhs=expression_plan(_hardy_n_closed,
                                "gamma/4 - (x - log 2 - 1)/2 - 2 log[G((x+1)/2)/G(x/2)] + log Gamma(x/2)"),
            rhs_alternatives=(formula_plan(_hardy_n_negapolygamma,
                                           "closed form through the negapolygamma function"),),
            citation=Citation(_HARDY, "n-weighted Hardy series and the Barnes G function",
                              "separating the infinite series"),
            sweep=_HARDY_N_SWEEP,
        ),
        IdentityRecord(
            id='COR_CATALAN',
            title="sum (-1)^n n (H_n - log(n - 1/2) - gamma - 1/n) = (gamma+1)/4 - G/pi - log(lemniscate^2/pi)/4",
            params=(),
            lhs=series_plan(lambda p: summands.hardy_weighted(F(1, 2)), SumMethod.ALTERNATING_ACCEL),
            rhs=formula_plan(_catalan_closed),
            citation=Citation(_HARDY, "Catalan's and the lemniscate constant",
                              "is Catalan's constant"),
        ),
        IdentityRecord(
            id='COR_GIESEKING',
            title="sum (-1)^n n (H_n - log(n - 1/3) - gamma - 5/(6n))",
            params=(),
            lhs=series_plan(lambda p: summands.hardy_weighted(F(2, 3)), SumMethod.ALTERNATING_ACCEL),
            rhs=formula_plan(_gieseking_closed),
            citation=Citation(_HARDY, "Gieseking's constant",
                              "denotes Gieseking's constant"),
        ),

        # Gamma, Barnes G and Hurwitz zeta special values
        IdentityRecord(
            id='NEGAPOLY_HALF',
            title="psi^(-2)(1/2) = 3/2 log A + 5/24 log 2 + log(pi)/4",
            params=(),
            lhs=quadrature_plan('loggamma', lambda p: {'z': F(1, 2)}),
            rhs=fixed_expression_plan(_s(LOGA, coeff=F(3, 2)) + _s(LOG2, coeff=F(5, 24))
                                      + _s(LOGPI, coeff=F(1, 4))),
            citation=Citation(_SPECIAL, "Negapolygamma at 1/2 through zeta'(-1, 1/2)",
                              "ψ^{(−2)}(1) = log(2π)/2"),
        ),
        IdentityRecord(
            id='NEGAPOLY_ONE',
            title="psi^(-2)(1) = log(2 pi)/2",
            params=(),
            lhs=quadrature_plan('loggamma', lambda p: {'z': F(1)}),
            rhs=fixed_expression_plan(_s(LOG2, coeff=F(1, 2)) + _s(LOGPI, coeff=F(1, 2))),
            citation=Citation(_SPECIAL, "Raabe's integral",
                              "ψ^{(−2)}(1) = log(2π)/2"),
        ),
        IdentityRecord(
            id='NEGAPOLY',
            title="int_0^z log Gamma(t) dt = z(1-z)/2 + z log(2 pi)/2 + z log Gamma(z) - log G(z+1)",
            params=(_positive_rational('z', F(1, 4)),),
            lhs=quadrature_plan('loggamma'),
            rhs=formula_plan(lambda p, ctx: negapolygamma2(p['z'], ctx)),
            citation=Citation(_SPECIAL, "Negapolygamma through the Barnes G function",
                              "polygamma functions of negative order"),
            sweep=({'z': F(3, 2)},),
        ),
        IdentityRecord(
            id='DIGAMMA_ALT_SERIES',
            title="sum_{n>=0} (-1)^n/(n + z) = [psi((z+1)/2) - psi(z/2)]/2",
            params=(_positive_rational('z', F(1, 3)),),
            lhs=series_plan(lambda p: summands.digamma_alternating(p['z']),
                            SumMethod.ALTERNATING_ACCEL),
            rhs=formula_plan(_digamma_alt_closed),
            citation=Citation(_SPECIAL, "Alternating series of the digamma function",
                              "where ψ denotes the digamma function"),
            sweep=({'z': F(1)}, {'z': F(5, 2)}),
        ),
        IdentityRecord(
            id='LOGGAMMA_SERIES',
            title="log Gamma(z+1) + gamma z = -sum [log(1 + z/n) - z/n]",
            params=(ParamSpec('z', ParamKind.RATIONAL, F(1, 2), F(-1), exclusive_minimum=True),),
            lhs=series_plan(lambda p: summands.weierstrass_loggamma(p['z']),
                            SumMethod.ASYMPTOTIC_TAIL),
            rhs=expression_plan(lambda p: _s(log_gamma(p['z'] + 1)) + _s(GAMMA, coeff=p['z'])),
            citation=Citation(_SPECIAL, "Weierstrass product of the gamma function",
                              "Weierstrass' definition of the gamma function"),
            sweep=({'z': F(2)}, {'z': F(7, 3)}),
        ),
        IdentityRecord(
            id='QUARTER_VALUES',
            title="psi^(2k-1)(a) at a = 1/4, 3/4 through pi, Bernoulli numbers and beta(2k)",
            params=(_int('k', 1, 1), ParamSpec('a', ParamKind.RATIONAL, F(1, 4), F(1, 4), F(3, 4))),
            lhs=formula_plan(lambda p, ctx: polygamma(2 * _k(p) - 1, p['a'], ctx),
                             "polygamma by recurrence and asymptotic series"),
            rhs=formula_plan(lambda p, ctx: quarter_values(_k(p), p['a'], QuarterKind.POLYGAMMA, ctx)),
            citation=Citation(_SPECIAL, "Polygamma values at quarter arguments",
                              "denotes the Dirichlet beta function"),
            sweep=tuple({'k': F(k), 'a': a} for k in (1, 2, 3) for a in (F(1, 4), F(3, 4))),
            constraint=_quarter_constraint,
        ),
        IdentityRecord(
            id='ZETA_PRIME_QUARTER',
            title="zeta'(-1, a) at a = 1/4, 3/4",
            params=(ParamSpec('a', ParamKind.RATIONAL, F(1, 4), F(1, 4), F(3, 4)),),
            lhs=formula_plan(lambda p, ctx: _zeta_prime_via_barnes(p['a'], ctx),
                             "zeta'(-1) - log G(a) - (1 - a) log Gamma(a)"),
            rhs=formula_plan(lambda p, ctx: quarter_values(1, p['a'], QuarterKind.ZETA_PRIME, ctx)),
            citation=Citation(_SPECIAL, "Hurwitz zeta derivative at quarter arguments",
                              "to determine special values"),
            sweep=({'a': F(3, 4)},),
            constraint=_quarter_constraint,
        ),
        IdentityRecord(
            id='ZETA_PRIME_HALF',
            title="zeta'(-1, 1/2) = -B_2 log 2 / 4 - zeta'(-1)/2",
            params=(),
            lhs=formula_plan(lambda p, ctx: _zeta_prime_via_barnes(F(1, 2), ctx),
                             "zeta'(-1) - log G(1/2) - log Gamma(1/2)/2"),
            rhs=formula_plan(lambda p, ctx: zeta_prime_half(1, ctx)),
            citation=Citation(_SPECIAL, "Hurwitz zeta derivative at 1/2",
                              "where B_n is the nth Bernoulli number"),
        ),
        IdentityRecord(
            id='BARNES_QUARTER',
            title="log G(3/4) - log G(1/4) = G/(2 pi) - log 2/8 - log(pi)/4 + log Gamma(1/4)",
            params=(),
            lhs=formula_plan(lambda p, ctx: log_barnes_g(F(3, 4), ctx) - log_barnes_g(F(1, 4), ctx)),
            rhs=formula_plan(_barnes_quarter_closed),
            citation=Citation(_SPECIAL, "Barnes G at quarter arguments",
                              "use the special value"),
        ),
        IdentityRecord(
            id='BARNES_THIRD',
            title="log G(1/3) through log Gamma(1/3), log A and Gieseking's constant",
            params=(),
            lhs=formula_plan(lambda p, ctx: log_barnes_g(F(1, 3), ctx)),
            rhs=formula_plan(_barnes_third_closed),
            citation=Citation(_SPECIAL, "Barnes G at 1/3",
                              "We will make use of the following special values"),
        ),
        IdentityRecord(
            id='BARNES_FIVE_SIXTHS',
            title="log G(5/6) through log Gamma(5/6), log A and Gieseking's constant",
            params=(),
            lhs=formula_plan(lambda p, ctx: log_barnes_g(F(5, 6), ctx)),
            rhs=formula_plan(_barnes_five_sixths_closed),
            citation=Citation(_SPECIAL, "Barnes G at 5/6",
                              "We will make use of the following special values"),
        ),
        IdentityRecord(
            id='LEMNISCATE_GAMMA',
            title="lemniscate constant = Gamma(1/4)^2 / (2 sqrt(2 pi))",
            params=(),
            lhs=formula_plan(lambda p, ctx: _const(ConstantName.LEMNISCATE, ctx),
                             "pi / AGM(1, sqrt 2)"),
            rhs=formula_plan(_lemniscate_from_gamma),
            citation=Citation(_SPECIAL, "Lemniscate constant and Gamma(1/4)",
                              "ϖ = Γ²(1/4)/(2√(2π))"),
        ),
        IdentityRecord(
            id='TRIGAMMA_THIRD',
            title="psi'(1/3) = 2 sqrt(3) kappa + 2 pi^2/3",
            params=(),
            lhs=formula_plan(lambda p, ctx: polygamma(1, F(1, 3), ctx)),
            rhs=formula_plan(lambda p, ctx: _trigamma_third(ctx)),
            citation=Citation(_SPECIAL, "Trigamma at 1/3 and Gieseking's constant",
                              "2√3 κ + 2π²/3"),
        ),
        IdentityRecord(
            id='TRIGAMMA_FIVE_SIXTHS',
            title="psi'(5/6) = 16 pi^2/3 - 5 psi'(1/3)",
            params=(),
            lhs=formula_plan(lambda p, ctx: polygamma(1, F(5, 6), ctx)),
            rhs=formula_plan(lambda p, ctx: 16 * _const(ConstantName.PI, ctx) ** 2 / 3
                             - 5 * _trigamma_third(ctx)),
            citation=Citation(_SPECIAL, "Multiplication and reflection formulas for trigamma",
                              "ψ^{(1)}(5/6) = 16π²/3 − 5ψ^{(1)}(1/3)"),
        ),
    ]
    return records



CATALOG: Dict[str, IdentityRecord] = {record.id: record for record in _build_records()}


def all_records() -> List[IdentityRecord]:
    """Records in stable id order."""
    return [CATALOG[key] for key in sorted(CATALOG)]


def get_identity(identity_id: str) -> IdentityRecord:
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity '{identity_id}'")


def bind_params(record: IdentityRecord, params: Optional[Dict[str, object]] = None) -> Params:
    """
    Merge user bindings into the record defaults and check the schema.

    Args:
        record: Identity record
        params: Name -> value (Fraction, int or "a/b" text)

    Returns:
        Complete Params of exact rationals

    Raises:
        ParameterError: Unknown name, malformed value or value outside the domain
    """

    bound = record.default_params()
    schema = {p.name: p for p in record.params}
    for name, value in (params or {}).items():
        if name not in schema:
            known = ", ".join(schema) or "none"
            raise ParameterError(f"{record.id}: unknown parameter '{name}' (parameters: {known})")
        bound[name] = parse_rational(value) if isinstance(value, str) else Fraction(value)
    for name, value in bound.items():
        spec = schema[name]
        if not spec.contains(value):
            raise ParameterError(
                f"{record.id}: {name}={value} outside domain {spec.domain_text()}")
    if record.constraint is not None:
        problem = record.constraint(bound)
        if problem:
            raise ParameterError(f"{record.id}: {problem}")
    return bound


def parse_rational(text: str) -> Fraction:
    """
    Parse an integer literal or "a/b".

    Decimal notation such as "0.5" is rejected.
    """

    cleaned = text.strip()
    if not cleaned or '.' in cleaned or 'e' in cleaned.lower():
        raise ParameterError(f"'{text}' is not an integer or a/b rational")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"'{text}' is not an integer or a/b rational")


def sweep_bindings(record: IdentityRecord) -> List[Params]:
    """Default binding followed by the sweep, without duplicates."""
    bindings: List[Params] = []
    seen = set()
    for extra in ({},) + tuple(record.sweep):
        bound = bind_params(record, extra)
        key: Tuple = tuple(sorted(bound.items()))
        if key not in seen:
            seen.add(key)
            bindings.append(bound)
    return bindings
