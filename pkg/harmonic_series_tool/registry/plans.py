"""
Evaluation Plans Module

Builders turning a series, an integrand family, an Expression or a
closed-form routine into an EvaluationPlan. Every plan returns an
Evaluation carrying its own error estimate.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from mpmath import mpf

from ..config.models import (EvaluationPlan, Evaluation, Params, SeriesSpec,
                             SumMethod, SumResult)
from ..engine.eulersum import Expression, expr_eval, format_expression
from ..engine.numkernel import PrecisionContext, ensure_finite
from ..engine.quadrature import integrate_param_with_error
from ..engine.series import (TailModel, abel_transform, power_tail_model,
                             sum_alternating_accel, sum_direct,
                             sum_with_asymptotic_tail)

logger = logging.getLogger(__name__)

# Closed forms lose at most this many digits to cancellation
CLOSED_FORM_LOSS_DIGITS = 5

# Smooth tails: pure inverse powers
POWER_TAIL_MODEL: TailModel = power_tail_model(14)
POWER_TAIL_CUTOFF = 1000

# Tails carrying log N
LOG_TAIL_MODEL: TailModel = power_tail_model(8, with_logs=True)
LOG_TAIL_CUTOFF = 4000


def rounding_floor(value: mpf, ctx: PrecisionContext, operations: int = 1) -> mpf:
    """Accumulated rounding of `operations` steps at the working precision."""
    with ctx.workdps():
        return ctx.epsilon() * max(abs(value), mpf(1)) * max(operations, 10)


def _from_sum(result: SumResult, ctx: PrecisionContext) -> Evaluation:
    value = ensure_finite(result.value, result.method.value)
    floor = rounding_floor(value, ctx, result.terms_used)
    return Evaluation(value, max(result.est_error, floor), result.method)


def series_plan(build: Callable[[Params], SeriesSpec], method: SumMethod,
                cutoff: int = POWER_TAIL_CUTOFF, tail_model: Optional[TailModel] = None,
                description: str = "") -> EvaluationPlan:
    """
    Plan summing a parameterized series with one of the series engines.

    Args:
        build: params -> SeriesSpec
        method: DIRECT, ALTERNATING_ACCEL or ASYMPTOTIC_TAIL
        cutoff: First checkpoint for ASYMPTOTIC_TAIL
        tail_model: Tail model for ASYMPTOTIC_TAIL (default POWER_TAIL_MODEL)
        description: Shown in listings
    """
    if method not in (SumMethod.DIRECT, SumMethod.ALTERNATING_ACCEL, SumMethod.ASYMPTOTIC_TAIL):
        raise ValueError(f"series_plan does not support {method}")
    model = tail_model or POWER_TAIL_MODEL

    def evaluate(params: Params, ctx: PrecisionContext) -> Evaluation:
        spec = build(params)
        if method == SumMethod.DIRECT:
            result = sum_direct(spec, ctx)
        elif method == SumMethod.ALTERNATING_ACCEL:
            result = sum_alternating_accel(spec, ctx)
        else:
            result = sum_with_asymptotic_tail(spec, cutoff, ctx, model)
        return _from_sum(result, ctx)

    return EvaluationPlan(method, evaluate, description, source=build)


def abel_plan(build: Callable[[Params], Tuple[SeriesSpec, SeriesSpec,
                                              Callable[[int, PrecisionContext], mpf]]],
              cutoff: int = POWER_TAIL_CUTOFF, tail_model: Optional[TailModel] = None,
              description: str = "") -> EvaluationPlan:
    """
    Plan applying summation by parts, then completing the transformed
    series with the asymptotic-tail engine.

    Args:
        build: params -> (a, b, closed form of the partial sums of a)
        cutoff: First checkpoint of the tail fit
        tail_model: Tail model (default POWER_TAIL_MODEL)
        description: Shown in listings
    """
    model = tail_model or POWER_TAIL_MODEL

    def evaluate(params: Params, ctx: PrecisionContext) -> Evaluation:
        a, b, partial_sums = build(params)
        transformed = abel_transform(a, b, partial_sums=partial_sums)
        result = sum_with_asymptotic_tail(transformed, cutoff, ctx, model)
        evaluation = _from_sum(result, ctx)
        return Evaluation(evaluation.value, evaluation.est_error, SumMethod.ABEL)

    return EvaluationPlan(SumMethod.ABEL, evaluate, description, source=build)


def quadrature_plan(family: str,
                    family_params: Optional[Callable[[Params], Dict[str, Fraction]]] = None,
                    scale: Fraction = Fraction(1),
                    description: str = "") -> EvaluationPlan:
    """
    Plan integrating a named integrand family with tanh-sinh quadrature.

    Args:
        family: Name in quadrature.FAMILIES
        family_params: params -> family parameters (default: identity)
        scale: Exact factor applied to the integral
        description: Shown in listings
    """
    def evaluate(params: Params, ctx: PrecisionContext) -> Evaluation:
        bound = family_params(params) if family_params else dict(params)
        result = integrate_param_with_error(family, bound, ctx)
        with ctx.workdps():
            value = result.value * scale.numerator / scale.denominator
            error = result.est_error * abs(scale.numerator) / scale.denominator
        return Evaluation(value, max(error, rounding_floor(value, ctx, result.evaluations)),
                          SumMethod.QUADRATURE)

    return EvaluationPlan(SumMethod.QUADRATURE, evaluate, description or family, source=family)


def _closed_form_error(value: mpf, ctx: PrecisionContext) -> mpf:
    return rounding_floor(value, ctx) * 10 ** CLOSED_FORM_LOSS_DIGITS


def expression_plan(build: Callable[[Params], Expression], description: str = "") -> EvaluationPlan:
    """Plan evaluating an exact Expression over the constant basis."""
    def evaluate(params: Params, ctx: PrecisionContext) -> Evaluation:
        value = ensure_finite(expr_eval(build(params), ctx), "expression")
        return Evaluation(value, _closed_form_error(value, ctx), SumMethod.EXPRESSION)

    return EvaluationPlan(SumMethod.EXPRESSION, evaluate, description, source=build)


def fixed_expression_plan(expression: Expression) -> EvaluationPlan:
    """Expression plan without parameters; the description is the expression text."""
    return expression_plan(lambda params: expression, format_expression(expression))


def formula_plan(fn: Callable[[Params, PrecisionContext], mpf], description: str = "") -> EvaluationPlan:
    """Plan evaluating a closed-form routine at working precision."""
    def evaluate(params: Params, ctx: PrecisionContext) -> Evaluation:
        with ctx.workdps():
            value = ensure_finite(+fn(params, ctx), "formula")
        return Evaluation(value, _closed_form_error(value, ctx), SumMethod.FORMULA)

    return EvaluationPlan(SumMethod.FORMULA, evaluate, description, source=fn)
