"""
Series Engine Module

Summation of SeriesSpec objects to a target accuracy:
- direct summation with decay-class tail bounds
- Cohen-Villegas-Zagier acceleration of alternating series
- asymptotic-tail completion (partial sums at geometric checkpoints fitted
  to a model S + sum c N^-e log^l N)
- Abel summation by parts, producing a new SeriesSpec
"""
import logging
import math
import warnings
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np
from mpmath import mp, mpf

from ..config.models import (DecayClass, DecayKind, SeriesSpec, SignPattern,
                             SumMethod, SumResult)
from ..config.settings import get_settings
from .errors import (BudgetExhaustedError, DomainError, ExtrapolationError,
                     PrecisionWarning)
from .numkernel import PrecisionContext, accelerate_alternating, cvz_terms

logger = logging.getLogger(__name__)

TailModel = Tuple[Tuple[int, int], ...]

# n^-1, n^-2, n^-2 log n, n^-3, n^-3 log n
DEFAULT_TAIL_MODEL: TailModel = ((1, 0), (2, 0), (2, 1), (3, 0), (3, 1))


def power_tail_model(max_exponent: int, with_logs: bool = False,
                     min_exponent: int = 1) -> TailModel:
    """
    Build a tail model of inverse powers, optionally paired with log N.

    Args:
        max_exponent: Largest exponent e in N^-e
        with_logs: Also include N^-e log N for every exponent
        min_exponent: Smallest exponent

    Returns:
        Tuple of (exponent, log power) pairs
    """
    model = []
    for e in range(min_exponent, max_exponent + 1):
        model.append((e, 0))
        if with_logs:
            model.append((e, 1))
    return tuple(model)


def _offset(spec: SeriesSpec, ctx: PrecisionContext) -> mpf:
    return spec.offset(ctx) if spec.offset is not None else mpf(0)


def _achieved_digits(bound: Optional[mpf], total: mpf) -> int:
    if bound is None:
        return 0
    if bound == 0:
        return 10 ** 6
    rel = bound / max(abs(total), mpf(1))
    return max(int(mp.floor(-mp.log10(rel))), 0)


class _TailBound:
    """Tail bound after the latest term, by sign pattern and decay class."""

    def __init__(self, spec: SeriesSpec):
        self.spec = spec
        self.previous: Optional[mpf] = None

    def update(self, n: int, term: mpf) -> Optional[mpf]:
        current = abs(term)
        previous, self.previous = self.previous, current
        decay = self.spec.decay

        # decreasing magnitudes: the omitted tail is below the last included term
        if self.spec.sign_pattern == SignPattern.ALTERNATING:
            return current

        if current == 0 and previous == 0:
            return mpf(0)
        if decay.kind == DecayKind.FACTORIAL:
            if not previous:
                return None
            ratio = current / previous
            return 2 * ratio * current if ratio <= mpf(1) / 2 else None
        if decay.kind == DecayKind.GEOMETRIC:
            r = mpf(decay.ratio)
            if previous:
                r = max(r, current / previous)
            if r >= 1:
                return None
            return max(current, previous or 0) * r / (1 - r)
        # power_log(m, j): 2 * integral of C log^j x / x^m from n
        m = mpf(decay.exponent)
        if m <= 1 or n < 3:
            return None
        scale = max(current, previous or 0)
        log_n = mp.log(n)
        correction = 1 + decay.log_power / ((m - 1) * log_n)
        return 2 * scale * n / (m - 1) * correction


def sum_direct(spec: SeriesSpec, ctx: PrecisionContext,
               term_budget: Optional[int] = None) -> SumResult:
    """
    Sum a series term by term until the tail bound meets the target.

    Alternating series are bounded by the last included term, which
    dominates the first omitted one; factorial, geometric and power_log
    decay classes use their own tail bounds.

    Args:
        spec: Series to sum
        ctx: Precision context
        term_budget: Maximum number of terms (default from settings)

    Returns:
        SumResult with the tail bound as est_error

    Raises:
        BudgetExhaustedError: The budget ran out before the tail bound met
            10^-target_digits
    """
    cfg = get_settings().series
    budget = spec.term_budget or term_budget or cfg.term_budget
    if cfg.validate_decay:
        validate_decay(spec, ctx)

    bounder = _TailBound(spec)
    with ctx.workdps():
        tol = ctx.tolerance()
        total = mpf(0)
        bound = None
        count = 0
        for term in spec.iter_terms(spec.start_index, ctx):
            n = spec.start_index + count
            total += term
            count += 1
            bound = bounder.update(n, term)
            if bound is not None and bound <= tol * max(abs(total), mpf(1)):
                logger.debug(f"{spec.name}: direct sum settled after {count} terms")
                return SumResult(total + _offset(spec, ctx), count, SumMethod.DIRECT, bound)
            if count >= budget:
                raise BudgetExhaustedError(spec.name, _achieved_digits(bound, total), count)
    raise BudgetExhaustedError(spec.name, _achieved_digits(bound, total), count)


def sum_alternating_accel(spec: SeriesSpec, ctx: PrecisionContext,
                          n_terms: Optional[int] = None) -> SumResult:
    """
    Sum an alternating series with the CVZ scheme.

    Args:
        spec: Series with sign_pattern ALTERNATING
        ctx: Precision context
        n_terms: Terms used (default reaches the working precision)

    Returns:
        SumResult with the scheme's error bound as est_error
    """
    if spec.sign_pattern != SignPattern.ALTERNATING:
        raise DomainError("sum_alternating_accel", spec.name, "series is not alternating")
    n_terms = n_terms or cvz_terms(ctx)
    with ctx.workdps():
        terms: List[mpf] = []
        for term in spec.iter_terms(spec.start_index, ctx):
            terms.append(term)
            if len(terms) >= n_terms:
                break
        _check_alternation(spec.name, terms)
        value, bound = accelerate_alternating(
            lambda k: terms[k] if k % 2 == 0 else -terms[k], n_terms)
        logger.debug(f"{spec.name}: accelerated with {n_terms} terms")
        return SumResult(value + _offset(spec, ctx), n_terms, SumMethod.ALTERNATING_ACCEL, bound)


def _check_alternation(name: str, terms: Sequence[mpf]):
    signs = [mp.sign(t) for t in terms if t != 0]
    for a, b in zip(signs, signs[1:]):
        if a == b:
            raise DomainError("sum_alternating_accel", name, "consecutive terms share a sign")


def _checkpoints(cutoff: int, span: float, count: int) -> List[int]:
    """count geometric checkpoints in [cutoff, span*cutoff], even and increasing."""
    points: List[int] = []
    for i in range(count):
        raw = cutoff * span ** (i / (count - 1)) if count > 1 else cutoff
        n = 2 * int(round(raw / 2))
        if points and n <= points[-1]:
            n = points[-1] + 2
        points.append(n)
    return points


def _partial_sums(spec: SeriesSpec, indices: Sequence[int],
                  ctx: PrecisionContext) -> Dict[int, mpf]:
    wanted = set(indices)
    last = max(indices)
    sums: Dict[int, mpf] = {}
    total = mpf(0)
    n = spec.start_index
    for term in spec.iter_terms(spec.start_index, ctx):
        total += term
        if n in wanted:
            sums[n] = +total
        if n >= last:
            break
        n += 1
    return sums


def _extrapolate(model: TailModel, points: Sequence[int], sums: Dict[int, mpf],
                 name: str, guard: int) -> mpf:
    base = mpf(points[0])
    rows = []
    for n in points:
        x = mpf(n)
        scaled = base / x
        log_x = mp.log(x / base)
        rows.append([mpf(1)] + [scaled ** e * log_x ** l for e, l in model])
    matrix = mp.matrix(rows)
    rhs = mp.matrix([sums[n] for n in points])
    try:
        condition = mp.mnorm(matrix, 1) * mp.mnorm(mp.inverse(matrix), 1)
        if condition > mpf(10) ** guard:
            warnings.warn(
                f"{name}: tail model system condition {mpmath.nstr(condition, 3)} "
                f"exceeds 10^{guard}", PrecisionWarning)
    except ZeroDivisionError:
        raise ExtrapolationError(f"{name}: singular tail model system")
    return mp.lu_solve(matrix, rhs)[0]


def sum_with_asymptotic_tail(spec: SeriesSpec, cutoff: int, ctx: PrecisionContext,
                             tail_model: Optional[TailModel] = None) -> SumResult:
    """
    Sum directly to a cutoff and complete the tail from an asymptotic model.

    Partial sums at len(model)+1 even checkpoints in [cutoff, span*cutoff]
    are fitted exactly to S + sum c_(e,l) N^-e log^l N. A second fit from
    2*cutoff gives the returned value; the distance between the two fits is
    the error estimate.

    Args:
        spec: Series to sum
        cutoff: First checkpoint
        ctx: Precision context
        tail_model: (exponent, log power) basis (default DEFAULT_TAIL_MODEL)

    Returns:
        SumResult from the second cutoff

    Raises:
        ExtrapolationError: The two fits disagree beyond 10^-target_digits
    """
    cfg = get_settings().series
    model = tuple(tail_model or DEFAULT_TAIL_MODEL)
    guard = cfg.extrapolation_guard_digits
    inner = ctx.raised(guard)
    count = len(model) + 1

    with inner.workdps():
        first = _checkpoints(cutoff, cfg.extrapolation_span, count)
        second = _checkpoints(2 * cutoff, cfg.extrapolation_span, count)
        sums = _partial_sums(spec, sorted(set(first) | set(second)), inner)
        est_a = _extrapolate(model, first, sums, spec.name, guard)
        est_b = _extrapolate(model, second, sums, spec.name, guard)
        error = abs(est_b - est_a)
        offset = _offset(spec, inner)

    with ctx.workdps():
        value = +(est_b + offset)
        tolerance = ctx.tolerance() * max(abs(value), mpf(1))
        if error > tolerance:
            raise ExtrapolationError(
                f"{spec.name}: cutoffs {cutoff} and {2 * cutoff} disagree by "
                f"{mpmath.nstr(error, 5)} (tolerance {mpmath.nstr(tolerance, 3)})",
                estimates=(est_a, est_b))
        terms = second[-1] - spec.start_index + 1
        logger.debug(f"{spec.name}: extrapolated from {terms} terms, "
                     f"error {mpmath.nstr(error, 3)}")
        return SumResult(value, terms, SumMethod.ASYMPTOTIC_TAIL, +error)


class _RunningSums:
    """Random access to A_n = a_start + ... + a_n, extended incrementally."""

    def __init__(self, spec: SeriesSpec):
        self.spec = spec
        self._values: List[mpf] = []
        self._prec: Optional[int] = None

    def __call__(self, n: int, ctx: PrecisionContext) -> mpf:
        if self._prec != mp.prec:
            self._values = []
            self._prec = mp.prec
        index = n - self.spec.start_index
        while len(self._values) <= index:
            k = self.spec.start_index + len(self._values)
            previous = self._values[-1] if self._values else mpf(0)
            self._values.append(previous + self.spec.term(k, ctx))
        return self._values[index]


def abel_transform(a: SeriesSpec, b: SeriesSpec,
                   limit: Optional[Callable[[PrecisionContext], mpf]] = None,
                   partial_sums: Optional[Callable[[int, PrecisionContext], mpf]] = None,
                   sign_pattern: SignPattern = SignPattern.GENERAL,
                   decay: Optional[DecayClass] = None,
                   name: Optional[str] = None) -> SeriesSpec:
    """
    Summation by parts: sum a_k b_k = lim A_n b_(n+1) + sum A_k (b_k - b_(k+1)).

    Args:
        a: Sequence a_k (its start_index is used for both sequences)
        b: Sequence b_k
        limit: Declared value of lim A_n b_(n+1); None asserts zero
        partial_sums: Closed form for A_k, if known
        sign_pattern: Sign pattern of the transformed summand
        decay: Decay class of the transformed summand (default: one power
            faster than b for power_log b, otherwise b's class)
        name: Name of the new series

    Returns:
        SeriesSpec whose sum, offset included, equals sum a_k b_k
    """
    start = a.start_index
    big_a = partial_sums or _RunningSums(a)
    if decay is None:
        if b.decay.kind == DecayKind.POWER_LOG:
            decay = DecayClass.power_log(b.decay.exponent + 1, b.decay.log_power)
        else:
            decay = b.decay

    def term(k: int, ctx: PrecisionContext) -> mpf:
        return big_a(k, ctx) * (b.term(k, ctx) - b.term(k + 1, ctx))

    def stream(first: int, ctx: PrecisionContext):
        b_iter = b.iter_terms(first, ctx)
        current_b = next(b_iter)
        k = first
        for next_b in b_iter:
            yield big_a(k, ctx) * (current_b - next_b)
            current_b = next_b
            k += 1

    return SeriesSpec(
        name=name or f"abel({a.name}, {b.name})",
        term=term,
        sign_pattern=sign_pattern,
        decay=decay,
        start_index=start,
        stream=stream,
        offset=limit,
    )


def validate_decay(spec: SeriesSpec, ctx: PrecisionContext,
                   n_terms: Optional[int] = None) -> bool:
    """
    Check empirically that the declared decay class dominates the terms.

    Fits log|a_n| over the second half of the first n_terms terms with
    numpy.polyfit. A mismatch is logged as a warning, not raised.

    Returns:
        True when the declared class is consistent with the observed decay
    """
    n_terms = n_terms or get_settings().series.decay_validation_terms
    decay = spec.decay
    indices, logs = [], []
    with ctx.workdps():
        for i, term in enumerate(spec.iter_terms(spec.start_index, ctx)):
            if i >= n_terms:
                break
            if term != 0:
                indices.append(spec.start_index + i)
                logs.append(float(mp.log(abs(term))))
            if decay.kind == DecayKind.FACTORIAL and logs and logs[-1] < -2.3 * ctx.working_digits:
                break
    if len(indices) < 8:
        return True

    n = np.array(indices[len(indices) // 2:], dtype=float)
    y = np.array(logs[len(logs) // 2:])
    if decay.kind == DecayKind.FACTORIAL:
        # log-ratios must keep falling: slope of log|a_n| against n log n is negative
        slope = np.polyfit(n * np.log(n), y, 1)[0]
        ok = slope < 0
    elif decay.kind == DecayKind.GEOMETRIC:
        slope = np.polyfit(n, y, 1)[0]
        ok = decay.ratio == 0 or slope <= math.log(decay.ratio) + 0.05
    else:
        adjusted = y - decay.log_power * np.log(np.log(np.maximum(n, 3.0)))
        slope = np.polyfit(np.log(n), adjusted, 1)[0]
        ok = slope <= -decay.exponent + 0.1
    if not ok:
        logger.warning(f"{spec.name}: observed decay slope {slope:.3f} "
                       f"is slower than declared {decay}")
    return bool(ok)
