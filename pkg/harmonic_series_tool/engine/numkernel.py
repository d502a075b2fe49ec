"""
Numeric Kernel Module

Arbitrary-precision arithmetic on top of mpmath: precision contexts,
digit agreement, elementary functions, Bernoulli numbers, the named
constants and the Cohen-Villegas-Zagier kernel for alternating sums.
"""
import logging
import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

import mpmath
from mpmath import mp, mpf

from ..config.models import ConstantName, ElementaryFunction
from ..config.settings import get_settings, guard_digits_for
from .errors import DomainError, NonFiniteError, PrecisionLossError

logger = logging.getLogger(__name__)

# Returned by agree_digits for bit-identical values without a context
EXACT_AGREEMENT = 10 ** 6

Number = Union[int, Fraction, mpf, str]


@dataclass(frozen=True)
class PrecisionContext:
    """
    Requested accuracy plus guard digits.

    All work under a context happens at target_digits + guard_digits.
    """
    target_digits: int
    guard_digits: int

    def __post_init__(self):
        if self.target_digits < 10 or self.guard_digits < 10:
            raise ValueError(
                f"precision context needs target >= 10 and guard >= 10, "
                f"got {self.target_digits}/{self.guard_digits}"
            )

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    @contextmanager
    def workdps(self, extra: int = 0):
        """Activate the working precision (plus `extra` digits) for mpmath."""
        with mp.workdps(self.working_digits + extra):
            yield

    def raised(self, extra: int) -> 'PrecisionContext':
        """Same target, `extra` more guard digits."""
        return PrecisionContext(self.target_digits, self.guard_digits + extra)

    def tolerance(self) -> mpf:
        return mpf(10) ** (-self.target_digits)

    def epsilon(self) -> mpf:
        return mpf(10) ** (-self.working_digits)


def make_context(target_digits: int) -> PrecisionContext:
    """
    Build a context with the standard guard-digit policy.

    Args:
        target_digits: Decimal digits requested, within [min_digits, max_digits]

    Returns:
        PrecisionContext with guard = max(15, target / 4)
    """
    precision = get_settings().precision
    if not precision.min_digits <= target_digits <= precision.max_digits:
        raise ValueError(f"target_digits must lie in [{precision.min_digits}, "
                         f"{precision.max_digits}], got {target_digits}")
    return PrecisionContext(target_digits, guard_digits_for(target_digits))


def to_mpf(value: Number) -> mpf:
    """Convert an exact or decimal value to mpf at the active precision."""
    if isinstance(value, Fraction):
        return mpf(value.numerator) / value.denominator
    return mpf(value)


def ensure_finite(value: mpf, where: str) -> mpf:
    """Raise NonFiniteError if value is inf or nan."""
    if not mpmath.isfinite(value):
        raise NonFiniteError(f"{where} produced non-finite value {value}")
    return value


def agree_digits(a: Number, b: Number, ctx: PrecisionContext = None) -> int:
    """
    Leading significant decimal digits on which a and b agree.

    floor(-log10(|a - b| / max(|a|, |b|, 1))), clamped at 0. Equal values
    return the working precision of ctx, or EXACT_AGREEMENT without one.
    """
    dps = max(mp.dps, ctx.working_digits if ctx else 0, 30)
    with mp.workdps(dps):
        a, b = to_mpf(a), to_mpf(b)
        if a == b:
            return ctx.working_digits if ctx else EXACT_AGREEMENT
        scale = max(abs(a), abs(b), mpf(1))
        relative = abs(a - b) / scale
        # nudge so that exact powers of ten land on the right integer
        digits = int(mp.floor(-mp.log10(relative) + mpf(10) ** -12))
    return max(digits, 0)


def elementary(f: ElementaryFunction, x: Number, ctx: PrecisionContext,
               y: Number = None) -> mpf:
    """
    Evaluate an elementary function with a real-domain check.

    Args:
        f: Function to apply
        x: Argument
        ctx: Precision context
        y: Exponent, only for POW

    Returns:
        f(x) (or x**y) at working precision
    """
    f = ElementaryFunction(f)
    with ctx.workdps():
        x = to_mpf(x)
        if f == ElementaryFunction.EXP:
            result = mp.exp(x)
        elif f == ElementaryFunction.LOG:
            if x <= 0:
                raise DomainError("log", x, "requires x > 0")
            result = mp.log(x)
        elif f == ElementaryFunction.SQRT:
            if x < 0:
                raise DomainError("sqrt", x, "requires x >= 0")
            result = mp.sqrt(x)
        elif f == ElementaryFunction.COSH:
            result = mp.cosh(x)
        elif f == ElementaryFunction.ATANH:
            if abs(x) >= 1:
                raise DomainError("atanh", x, "requires |x| < 1")
            result = mp.atanh(x)
        else:
            if y is None:
                raise DomainError("pow", x, "missing exponent")
            y = to_mpf(y)
            if x < 0 and not mpmath.isint(y):
                raise DomainError("pow", x, "negative base needs an integer exponent")
            if x == 0 and y <= 0:
                raise DomainError("pow", x, "zero base needs a positive exponent")
            result = mp.power(x, y)
        return ensure_finite(+result, f.value)


_bernoulli_lock = threading.Lock()
_bernoulli_table: List[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """
    Exact Bernoulli number B_n with B_1 = -1/2.

    Uses the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if n < 0:
        raise DomainError("bernoulli", n, "requires n >= 0")
    if n >= 3 and n % 2 == 1:
        return Fraction(0)
    with _bernoulli_lock:
        table = _bernoulli_table
        while len(table) <= n:
            m = len(table)
            if m >= 3 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = sum(math.comb(m + 1, k) * table[k] for k in range(m))
            table.append(-acc / (m + 1))
        return table[n]


def bernoulli_mpf(n: int) -> mpf:
    """B_n converted at the active precision."""
    return to_mpf(bernoulli(n))


def cvz_terms(ctx: PrecisionContext, extra_digits: int = 0) -> int:
    """Number of CVZ terms that reaches the working precision of ctx."""
    cfg = get_settings().series
    return int(math.ceil(cfg.cvz_terms_per_digit * (ctx.working_digits + extra_digits))) \
        + cfg.cvz_extra_terms


def accelerate_alternating(magnitude: Callable[[int], mpf], n_terms: int) -> Tuple[mpf, mpf]:
    """
    Cohen-Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k.

    The scheme is linear in the a_k, so a_k may carry a common sign. The
    error decays like (3 + sqrt(8))^(-n_terms) for totally monotone a_k.

    Args:
        magnitude: k -> a_k, evaluated at the active precision
        n_terms: Number of terms used

    Returns:
        (value, error bound); the bound includes rounding at the active
        precision, (n_terms + 1)^2 ulps of the largest term
    """
    d = (3 + mp.sqrt(8)) ** n_terms
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    largest = mpf(0)
    for k in range(n_terms):
        a_k = magnitude(k)
        largest = max(largest, abs(a_k))
        c = b - c
        s += c * a_k
        b = 2 * b * (k + n_terms) * (k - n_terms) / ((2 * k + 1) * (k + 1))
    value = s / d
    scale = max(largest, abs(value))
    bound = 4 * scale / d + (n_terms + 1) ** 2 * mp.eps * scale
    return value, bound


def check_error_estimate(label: str, value: mpf, est_error: mpf,
                         recomputed: mpf, ctx: PrecisionContext) -> None:
    """
    Raise PrecisionLossError when a recomputation moves by more than est_error.

    One unit in the last working digit is always tolerated.
    """
    with ctx.workdps():
        slack = ctx.epsilon() * max(mpf(1), abs(value))
        moved = abs(to_mpf(recomputed) - to_mpf(value))
        if moved > est_error + slack:
            raise PrecisionLossError(
                f"{label}: value moved by {mpmath.nstr(moved, 5)} with extra guard "
                f"digits, more than its estimate {mpmath.nstr(est_error, 5)}"
            )


def dual_evaluate(fn: Callable[[PrecisionContext], mpf], ctx: PrecisionContext,
                  low: Optional[mpf] = None) -> Tuple[mpf, mpf]:
    """
    Evaluate at working precision and at working + 10 digits.

    Args:
        fn: ctx -> value
        ctx: Precision context of the low evaluation
        low: Value already computed with ctx, reused instead of a second call

    Returns:
        (higher precision value, absolute difference)

    Raises:
        PrecisionLossError if the two disagree before target_digits
    """
    extra = get_settings().precision.error_check_extra_digits
    if low is None:
        low = fn(ctx)
    high = fn(ctx.raised(extra))
    if agree_digits(low, high, ctx) < ctx.target_digits:
        raise PrecisionLossError(
            f"dual evaluation disagrees: {mpmath.nstr(low, 20)} vs {mpmath.nstr(high, 20)}"
        )
    with ctx.workdps(extra):
        return high, abs(high - low)


_constant_lock = threading.Lock()
_constant_cache: Dict[Tuple[ConstantName, int], mpf] = {}


def _glaisher(ctx: PrecisionContext) -> mpf:
    # log A = (gamma + log 2pi)/12 - zeta'(2)/(2 pi^2)
    from .specfun import zeta_prime
    zp2 = zeta_prime(2, ctx)
    log_a = (mp.euler + mp.log(2 * mp.pi)) / 12 - zp2 / (2 * mp.pi ** 2)
    return mp.exp(log_a)


def _euler_gompertz(ctx: PrecisionContext) -> mpf:
    from .specfun import ei
    return -mp.e * ei(-1, ctx)


_CONSTANT_ROUTINES: Dict[ConstantName, Callable[[PrecisionContext], mpf]] = {
    ConstantName.EULER_GAMMA: lambda ctx: +mp.euler,
    ConstantName.PI: lambda ctx: +mp.pi,
    ConstantName.LOG_TWO: lambda ctx: +mp.ln2,
    ConstantName.GLAISHER: _glaisher,
    ConstantName.CATALAN: lambda ctx: +mp.catalan,
    ConstantName.LEMNISCATE: lambda ctx: mp.pi / mp.agm(1, mp.sqrt(2)),
    ConstantName.GIESEKING: lambda ctx: mp.clsin(2, mp.pi / 3),
    ConstantName.EULER_GOMPERTZ: _euler_gompertz,
}


def constant(name: ConstantName, ctx: PrecisionContext) -> mpf:
    """
    Named constant at the working precision of ctx.

    Results are cached per (name, working digits). A racing duplicate
    computation is harmless; cache entries are written once under a lock.
    """
    name = ConstantName(name)
    key = (name, ctx.working_digits)
    with _constant_lock:
        cached = _constant_cache.get(key)
    if cached is not None:
        return cached
    with ctx.workdps():
        value = ensure_finite(+_CONSTANT_ROUTINES[name](ctx), name.value)
    with _constant_lock:
        _constant_cache.setdefault(key, value)
    logger.debug(f"Computed constant {name.value} at {ctx.working_digits} digits")
    return value
