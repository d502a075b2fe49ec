"""
Special Functions Module

Zeta-type functions, polylogarithms, gamma-type functions, the Barnes G
function, exponential integrals and the half/quarter special values of
Hurwitz zeta derivatives.

All functions take a PrecisionContext and return mpf values at its working
precision.
"""
import logging
import math
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

import mpmath
from mpmath import mp, mpf

from ..config.models import ConstantName
from .errors import DomainError
from .numkernel import (PrecisionContext, Number, accelerate_alternating,
                        bernoulli, bernoulli_mpf, constant, cvz_terms,
                        ensure_finite, to_mpf)

logger = logging.getLogger(__name__)


class SpecialFunction(Enum):
    """Functions reachable through evaluate_special."""
    ZETA = "zeta"
    ETA = "eta"
    BETA = "beta"
    POLYLOG = "polylog"
    LOGGAMMA = "loggamma"
    POLYGAMMA = "polygamma"
    NEGAPOLYGAMMA2 = "negapolygamma2"
    LOG_BARNES_G = "log-barnes-g"
    EIN = "ein"
    EI = "ei"
    ZETA_PRIME = "zeta-prime"
    ZETA_PRIME_NEG1 = "zeta-prime-neg1"
    ZETA_PRIME_HALF = "zeta-prime-half"
    QUARTER_ZETA_PRIME = "quarter-zeta-prime"
    QUARTER_POLYGAMMA = "quarter-polygamma"


class QuarterKind(Enum):
    ZETA_PRIME = "zeta_prime"
    POLYGAMMA = "polygamma"


@dataclass(frozen=True)
class SpecialValueRequest:
    """A special-function evaluation request."""
    function: SpecialFunction
    argument: Optional[Fraction] = None
    order: Optional[int] = None


_cache_lock = threading.Lock()
_integer_cache: Dict[Tuple[str, int, int], mpf] = {}


def _cached(kind: str, s: int, ctx: PrecisionContext, compute) -> mpf:
    key = (kind, s, ctx.working_digits)
    with _cache_lock:
        hit = _integer_cache.get(key)
    if hit is not None:
        return hit
    value = compute()
    with _cache_lock:
        _integer_cache.setdefault(key, value)
    return value


def _integral(s: Number) -> Optional[int]:
    """Return s as int when it is an exact integer, else None."""
    if isinstance(s, int):
        return s
    if isinstance(s, Fraction):
        return s.numerator if s.denominator == 1 else None
    s = mpf(s)
    return int(s) if mpmath.isint(s) else None


def zeta_nonpositive(n: int) -> Fraction:
    """Exact zeta(-n) for n >= 0."""
    if n == 0:
        return Fraction(-1, 2)
    return -bernoulli(n + 1) / (n + 1)


def _eta_by_acceleration(s: mpf, ctx: PrecisionContext) -> mpf:
    value, _ = accelerate_alternating(lambda k: mpf(k + 1) ** (-s), cvz_terms(ctx))
    return value


def dirichlet_eta(s: Number, ctx: PrecisionContext) -> mpf:
    """
    Dirichlet eta function for real s > 0.

    Args:
        s: Real order
        ctx: Precision context

    Returns:
        sum (-1)^(n-1) / n^s, accelerated
    """
    k = _integral(s)
    with ctx.workdps():
        s_val = to_mpf(s)
        if s_val <= 0:
            raise DomainError("dirichlet_eta", s, "requires s > 0")
        if k is not None:
            return _cached("eta", k, ctx, lambda: _eta_by_acceleration(s_val, ctx))
        return _eta_by_acceleration(s_val, ctx)


def riemann_zeta(s: Number, ctx: PrecisionContext) -> mpf:
    """
    Riemann zeta function for real s > 1 or integer s <= 0.

    s > 1 goes through eta(s) / (1 - 2^(1-s)).
    """
    k = _integral(s)
    if k is not None and k <= 0:
        with ctx.workdps():
            return to_mpf(zeta_nonpositive(-k))
    if k == 1:
        raise DomainError("riemann_zeta", s, "pole at s = 1")
    with ctx.workdps():
        s_val = to_mpf(s)
        if s_val <= 1:
            raise DomainError("riemann_zeta", s, "requires s > 1 or a non-positive integer")

        def compute():
            return dirichlet_eta(s_val, ctx) / (1 - mpf(2) ** (1 - s_val))

        if k is not None:
            return _cached("zeta", k, ctx, compute)
        return compute()


def dirichlet_beta(s: Number, ctx: PrecisionContext) -> mpf:
    """Dirichlet beta function sum (-1)^n / (2n+1)^s for s > 0."""
    with ctx.workdps():
        s_val = to_mpf(s)
        if s_val <= 0:
            raise DomainError("dirichlet_beta", s, "requires s > 0")
        value, _ = accelerate_alternating(lambda k: mpf(2 * k + 1) ** (-s_val), cvz_terms(ctx))
        return value


def dirichlet_eta_prime(s: Number, ctx: PrecisionContext) -> mpf:
    """eta'(s) = sum_{n>=2} (-1)^n log(n) / n^s, accelerated."""
    with ctx.workdps():
        s_val = to_mpf(s)
        if s_val <= 0:
            raise DomainError("dirichlet_eta_prime", s, "requires s > 0")
        value, _ = accelerate_alternating(
            lambda k: mp.log(k + 2) / mpf(k + 2) ** s_val, cvz_terms(ctx))
        return value


def zeta_prime(s: Number, ctx: PrecisionContext) -> mpf:
    """
    zeta'(s) for real s > 1 from the differentiated eta relation.

    zeta = eta / D with D = 1 - 2^(1-s) and D' = 2^(1-s) log 2.
    """
    with ctx.workdps():
        s_val = to_mpf(s)
        if s_val <= 1:
            raise DomainError("zeta_prime", s, "requires s > 1")
        eta = dirichlet_eta(s_val, ctx)
        eta_p = dirichlet_eta_prime(s_val, ctx)
        p = mpf(2) ** (1 - s_val)
        d = 1 - p
        return (eta_p * d - eta * p * mp.ln2) / d ** 2


def zeta_prime_negative_odd(k: int, ctx: PrecisionContext) -> mpf:
    """
    zeta'(1 - 2k) from the functional equation.

    zeta'(1-2k) = B_2k/(2k) * [H_{2k-1} - gamma - log(2 pi) + zeta'(2k)/zeta(2k)]
    """
    if k < 1:
        raise DomainError("zeta_prime_negative_odd", k, "requires k >= 1")
    with ctx.workdps():
        h = sum(Fraction(1, j) for j in range(1, 2 * k))
        gamma = constant(ConstantName.EULER_GAMMA, ctx)
        ratio = zeta_prime(2 * k, ctx) / riemann_zeta(2 * k, ctx)
        bracket = to_mpf(h) - gamma - mp.log(2 * mp.pi) + ratio
        return bernoulli_mpf(2 * k) / (2 * k) * bracket


def zeta_prime_neg1(ctx: PrecisionContext) -> mpf:
    """zeta'(-1) = 1/12 - log A."""
    with ctx.workdps():
        return mpf(1) / 12 - mp.log(constant(ConstantName.GLAISHER, ctx))


def zeta_prime_half(k: int, ctx: PrecisionContext) -> mpf:
    """
    Hurwitz zeta'(1 - 2k, 1/2).

    -B_2k log 2 / (4^k k) - (2^(2k-1) - 1) zeta'(1-2k) / 2^(2k-1)
    """
    if k < 1:
        raise DomainError("zeta_prime_half", k, "requires k >= 1")
    with ctx.workdps():
        b = bernoulli_mpf(2 * k)
        p = mpf(2) ** (2 * k - 1)
        return -b * mp.ln2 / (mpf(4) ** k * k) - (p - 1) * zeta_prime_negative_odd(k, ctx) / p


def _polylog_series(s: int, z: mpf, eps: mpf) -> mpf:
    total = mpf(0)
    power = mpf(1)
    k = 0
    while True:
        k += 1
        power *= z
        term = power / mpf(k) ** s
        total += term
        if abs(term) < eps * max(abs(total), mpf(1)):
            return total


def _polylog_log_expansion(s: int, z: mpf, ctx: PrecisionContext, eps: mpf) -> mpf:
    # Li_s(e^w) = sum_{k != s-1} zeta(s-k) w^k/k! + w^(s-1)/(s-1)! (H_{s-1} - log(-w))
    w = mp.log(z)
    total = mpf(0)
    power = mpf(1)      # w^k / k!
    k = 0
    while True:
        if k == s - 1:
            h = sum(Fraction(1, j) for j in range(1, s))
            term = power * (to_mpf(h) - mp.log(-w))
        elif k < s - 1:
            term = riemann_zeta(s - k, ctx) * power
        else:
            term = to_mpf(zeta_nonpositive(k - s)) * power
        total += term
        if k > s and term != 0 and abs(term) < eps:
            return total
        k += 1
        power = power * w / k
        if k > s + 4000:
            raise DomainError("polylog", z, "log expansion failed to settle")


def polylog(s: int, z: Number, ctx: PrecisionContext) -> mpf:
    """
    Polylogarithm Li_s(z) for integer s >= 1 and real |z| <= 1.

    |z| <= 1/2: power series. z in (1/2, 1): reflection for s = 2, log
    expansion otherwise. z in [-1, -1/2): accelerated alternating series.
    """
    if s < 1:
        raise DomainError("polylog", s, "order must be >= 1")
    with ctx.workdps():
        z = to_mpf(z)
        if abs(z) > 1:
            raise DomainError("polylog", z, "requires |z| <= 1")
        if s == 1:
            if z == 1:
                raise DomainError("polylog", z, "Li_1 has a pole at z = 1")
            return -mp.log1p(-z)
        if z == 0:
            return mpf(0)
        if z == 1:
            return riemann_zeta(s, ctx)
        if z == -1:
            return -dirichlet_eta(s, ctx)
        eps = ctx.epsilon()
        if abs(z) <= mpf(1) / 2:
            return _polylog_series(s, z, eps)
        if z > 0:
            if s == 2:
                one_minus = 1 - z
                return (riemann_zeta(2, ctx) - mp.log(z) * mp.log(one_minus)
                        - _polylog_series(2, one_minus, eps))
            return _polylog_log_expansion(s, z, ctx, eps)
        x = -z
        value, _ = accelerate_alternating(
            lambda k: x ** (k + 1) / mpf(k + 1) ** s, cvz_terms(ctx))
        return -value


def loggamma(x: Number, ctx: PrecisionContext) -> mpf:
    """log Gamma(x) for real x > 0."""
    with ctx.workdps():
        x = to_mpf(x)
        if x <= 0:
            raise DomainError("loggamma", x, "requires x > 0")
        return ensure_finite(mp.loggamma(x), "loggamma")


def polygamma(n: int, x: Number, ctx: PrecisionContext) -> mpf:
    """
    Polygamma psi^(n)(x) for n >= 0 and real x > 0.

    Shifts x upward with the recurrence until the asymptotic series with
    Bernoulli numbers reaches working precision.
    """
    if n < 0:
        raise DomainError("polygamma", n, "order must be >= 0")
    with ctx.workdps():
        x = to_mpf(x)
        if x <= 0:
            raise DomainError("polygamma", x, "requires x > 0")
        eps = ctx.epsilon()
        threshold = ctx.working_digits / 2 + n + 10
        shift = max(0, int(math.ceil(threshold - x)))
        correction = mpf(0)
        for j in range(shift):
            correction += (x + j) ** (-(n + 1))
        z = x + shift

        if n == 0:
            value = mp.log(z) - 1 / (2 * z)
            z2 = z * z
            zpow = z2
            for k in range(1, 500):
                term = bernoulli_mpf(2 * k) / (2 * k * zpow)
                value -= term
                if abs(term) < eps * abs(value):
                    break
                zpow *= z2
            return value - correction

        fact_n = math.factorial(n)
        value = mpf(math.factorial(n - 1)) / z ** n + mpf(fact_n) / (2 * z ** (n + 1))
        zpow = z ** (n + 2)
        for k in range(1, 500):
            coeff = Fraction(math.factorial(2 * k + n - 1), math.factorial(2 * k))
            term = bernoulli_mpf(2 * k) * to_mpf(coeff) / zpow
            value += term
            if abs(term) < eps * abs(value):
                break
            zpow *= z * z
        sign = 1 if n % 2 == 1 else -1
        return sign * value - (-1) ** n * fact_n * correction


def _log_barnes_g_taylor(w: mpf, ctx: PrecisionContext) -> mpf:
    # log G(1+w) = w log(2 pi)/2 - (w + (1+gamma) w^2)/2 + sum_{k>=2} (-1)^k zeta(k) w^(k+1)/(k+1)
    gamma = constant(ConstantName.EULER_GAMMA, ctx)
    total = w * mp.log(2 * mp.pi) / 2 - (w + (1 + gamma) * w * w) / 2
    if w == 0:
        return total
    eps = ctx.epsilon()
    power = w * w
    k = 1
    while True:
        k += 1
        power *= w
        term = riemann_zeta(k, ctx) * power / (k + 1)
        total += term if k % 2 == 0 else -term
        if abs(term) < eps:
            return total


def log_barnes_g(z: Number, ctx: PrecisionContext) -> mpf:
    """
    log G(z) for real z > 0.

    The argument is moved into (1/2, 3/2] with G(z+1) = Gamma(z) G(z) and
    finished with the Taylor series around 1.
    """
    with ctx.workdps():
        x = to_mpf(z)
        if x <= 0:
            raise DomainError("log_barnes_g", z, "requires z > 0")
        acc = mpf(0)
        half = mpf(1) / 2
        while x > 1 + half:
            x -= 1
            acc += loggamma(x, ctx)
        while x <= half:
            acc -= loggamma(x, ctx)
            x += 1
        return acc + _log_barnes_g_taylor(x - 1, ctx)


def negapolygamma2(z: Number, ctx: PrecisionContext) -> mpf:
    """
    psi^(-2)(z), the antiderivative of log Gamma vanishing at 0.

    z(1-z)/2 + (z/2) log(2 pi) + z log Gamma(z) - log G(z+1)
    """
    with ctx.workdps():
        x = to_mpf(z)
        if x <= 0:
            raise DomainError("negapolygamma2", z, "requires z > 0")
        return (x * (1 - x) / 2 + x / 2 * mp.log(2 * mp.pi)
                + x * loggamma(x, ctx) - log_barnes_g(x + 1, ctx))


def ein(z: Number, ctx: PrecisionContext) -> mpf:
    """
    Complementary exponential integral Ein(z) = sum (-1)^(k-1) z^k / (k k!).

    Extra digits are carried to absorb the cancellation for large |z|.
    """
    extra = int(abs(float(to_mpf(z))) * 0.4343) + 5
    with ctx.workdps(extra):
        z = to_mpf(z)
        if z == 0:
            return mpf(0)
        eps = ctx.epsilon()
        total = mpf(0)
        power = mpf(1)      # (-1)^(k-1) z^k / k!
        k = 0
        while True:
            k += 1
            power = -power * z / k if k > 1 else z
            term = power / k
            total += term
            if k > abs(z) and abs(term) < eps * max(abs(total), mpf(1)):
                break
    with ctx.workdps():
        return +total


def ei(x: Number, ctx: PrecisionContext) -> mpf:
    """Exponential integral Ei(x) = -Ein(-x) + log|x| + gamma for real x != 0."""
    with ctx.workdps():
        x = to_mpf(x)
        if x == 0:
            raise DomainError("ei", x, "logarithmic singularity at 0")
        return -ein(-x, ctx) + mp.log(abs(x)) + constant(ConstantName.EULER_GAMMA, ctx)


def quarter_values(k: int, which: Fraction, kind: QuarterKind, ctx: PrecisionContext) -> mpf:
    """
    Closed forms at 1/4 and 3/4.

    polygamma: psi^(2k-1)(a) = 4^(2k-1)/(2k) [pi^2k (2^2k - 1)|B_2k| +/- 2 (2k)! beta(2k)]
    zeta_prime: Hurwitz zeta'(1-2k, a) through psi^(2k-1)(1/4) and zeta'(1-2k).
    The upper sign belongs to a = 1/4.
    """
    if k < 1:
        raise DomainError("quarter_values", k, "requires k >= 1")
    which = Fraction(which)
    if which not in (Fraction(1, 4), Fraction(3, 4)):
        raise DomainError("quarter_values", which, "argument must be 1/4 or 3/4")
    kind = QuarterKind(kind)
    sign = 1 if which == Fraction(1, 4) else -1

    def psi_quarter(branch: int) -> mpf:
        b = abs(bernoulli_mpf(2 * k))
        inner = (mp.pi ** (2 * k) * (mpf(2) ** (2 * k) - 1) * b
                 + branch * 2 * math.factorial(2 * k) * dirichlet_beta(2 * k, ctx))
        return mpf(4) ** (2 * k - 1) / (2 * k) * inner

    with ctx.workdps():
        if kind == QuarterKind.POLYGAMMA:
            return psi_quarter(sign)
        b = bernoulli_mpf(2 * k)
        four_k = mpf(4) ** k
        term1 = -sign * (four_k - 1) * b * mp.pi / (4 * four_k * k)
        term2 = (four_k / 4 - 1) * b * mp.ln2 / (mpf(2) ** (4 * k - 1) * k)
        term3 = -sign * (-1) ** k * psi_quarter(1) / (4 * (8 * mp.pi) ** (2 * k - 1))
        term4 = -(mpf(2) ** (2 * k - 1) - 1) * zeta_prime_negative_odd(k, ctx) / mpf(2) ** (4 * k - 1)
        return term1 + term2 + term3 + term4


def evaluate_special(request: SpecialValueRequest, ctx: PrecisionContext) -> mpf:
    """
    Dispatch a SpecialValueRequest.

    Args:
        request: Function, argument and order
        ctx: Precision context

    Returns:
        Function value at working precision
    """
    fn = request.function
    arg = request.argument
    order = request.order

    def need_arg():
        if arg is None:
            raise DomainError(fn.value, None, "an argument is required")
        return arg

    def need_order():
        if order is None:
            raise DomainError(fn.value, None, "an order is required")
        return order

    if fn == SpecialFunction.ZETA:
        return riemann_zeta(need_arg(), ctx)
    if fn == SpecialFunction.ETA:
        return dirichlet_eta(need_arg(), ctx)
    if fn == SpecialFunction.BETA:
        return dirichlet_beta(need_arg(), ctx)
    if fn == SpecialFunction.POLYLOG:
        return polylog(need_order(), need_arg(), ctx)
    if fn == SpecialFunction.LOGGAMMA:
        return loggamma(need_arg(), ctx)
    if fn == SpecialFunction.POLYGAMMA:
        return polygamma(need_order(), need_arg(), ctx)
    if fn == SpecialFunction.NEGAPOLYGAMMA2:
        return negapolygamma2(need_arg(), ctx)
    if fn == SpecialFunction.LOG_BARNES_G:
        return log_barnes_g(need_arg(), ctx)
    if fn == SpecialFunction.EIN:
        return ein(need_arg(), ctx)
    if fn == SpecialFunction.EI:
        return ei(need_arg(), ctx)
    if fn == SpecialFunction.ZETA_PRIME:
        return zeta_prime(need_arg(), ctx)
    if fn == SpecialFunction.ZETA_PRIME_NEG1:
        return zeta_prime_neg1(ctx)
    if fn == SpecialFunction.ZETA_PRIME_HALF:
        return zeta_prime_half(need_order(), ctx)
    if fn == SpecialFunction.QUARTER_ZETA_PRIME:
        return quarter_values(need_order(), need_arg(), QuarterKind.ZETA_PRIME, ctx)
    return quarter_values(need_order(), need_arg(), QuarterKind.POLYGAMMA, ctx)
