"""
Sequences Module

Harmonic, generalized harmonic and skew-harmonic numbers (exact), zeta and
exponential tails, rising factorials, fractional parts of n!e and the
generating functions of the tails.
"""
import logging
import math
import threading
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from mpmath import mp, mpf

from ..config.models import ConstantName
from .errors import DomainError
from .numkernel import PrecisionContext, Number, constant, to_mpf
from .specfun import polygamma, polylog, riemann_zeta

logger = logging.getLogger(__name__)

# Above this index real-valued harmonic numbers come from the digamma function
EXACT_INDEX_LIMIT = 64


class HarmonicCache:
    """
    Exact partial sums, grown incrementally from the last cached index.

    Tables are keyed by ('power', p) for H_n^(p) and ('skew', 1) for the
    skew-harmonic numbers. Index 0 holds the empty sum.
    """

    def __init__(self):
        self._tables: Dict[Tuple[str, int], List[Fraction]] = {}
        self._lock = threading.Lock()

    def get(self, n: int, p: int = 1, skew: bool = False) -> Fraction:
        key = ('skew', 1) if skew else ('power', p)
        with self._lock:
            table = self._tables.setdefault(key, [Fraction(0)])
            while len(table) <= n:
                j = len(table)
                if skew:
                    step = Fraction(1 if j % 2 == 1 else -1, j)
                else:
                    step = Fraction(1, j ** p)
                table.append(table[-1] + step)
            return table[n]

    def clear(self):
        with self._lock:
            self._tables.clear()


_harmonic_cache = HarmonicCache()


def harmonic(n: int) -> Fraction:
    """Exact H_n = 1 + 1/2 + ... + 1/n."""
    if n < 1:
        raise DomainError("harmonic", n, "requires n >= 1")
    return _harmonic_cache.get(n)


def gen_harmonic(n: int, p: int) -> Fraction:
    """Exact H_n^(p) = 1 + 1/2^p + ... + 1/n^p."""
    if n < 1 or p < 1:
        raise DomainError("gen_harmonic", (n, p), "requires n >= 1 and p >= 1")
    return _harmonic_cache.get(n, p)


def skew_harmonic(n: int) -> Fraction:
    """Exact skew-harmonic number 1 - 1/2 + ... + (-1)^(n-1)/n."""
    if n < 1:
        raise DomainError("skew_harmonic", n, "requires n >= 1")
    return _harmonic_cache.get(n, skew=True)


def harmonic_real(n: int, ctx: PrecisionContext) -> mpf:
    """H_n at working precision, psi(n+1) + gamma for large n."""
    if n < 1:
        raise DomainError("harmonic_real", n, "requires n >= 1")
    with ctx.workdps():
        if n <= EXACT_INDEX_LIMIT:
            return to_mpf(harmonic(n))
        return polygamma(0, n + 1, ctx) + constant(ConstantName.EULER_GAMMA, ctx)


def skew_harmonic_real(n: int, ctx: PrecisionContext) -> mpf:
    """Skew-harmonic number at working precision, via digamma for large n."""
    if n < 1:
        raise DomainError("skew_harmonic_real", n, "requires n >= 1")
    with ctx.workdps():
        if n <= EXACT_INDEX_LIMIT:
            return to_mpf(skew_harmonic(n))
        # sum_{k>=0} (-1)^k/(n+1+k) = [psi((n+2)/2) - psi((n+1)/2)] / 2
        tail = (polygamma(0, mpf(n + 2) / 2, ctx) - polygamma(0, mpf(n + 1) / 2, ctx)) / 2
        sign = 1 if n % 2 == 0 else -1
        return mp.ln2 - sign * tail


def pochhammer_rising(z: Number, k: int, ctx: PrecisionContext) -> mpf:
    """Rising factorial z(z+1)...(z+k-1)."""
    if k < 1:
        raise DomainError("pochhammer_rising", k, "requires k >= 1")
    with ctx.workdps():
        z = to_mpf(z)
        result = mpf(1)
        for j in range(k):
            result *= z + j
        return result


def tail_zeta(p: int, n: int, ctx: PrecisionContext) -> mpf:
    """
    Tail zeta(p) - H_n^(p) of the p-series.

    Computed as the Hurwitz value zeta(p, n+1) = (-1)^p psi^(p-1)(n+1) / (p-1)!
    so no digits are lost to cancellation for large n.

    Args:
        p: Exponent (>= 2)
        n: Number of subtracted terms (>= 0)
        ctx: Precision context

    Returns:
        Strictly positive tail value
    """
    if p < 2:
        raise DomainError("tail_zeta", p, "requires p >= 2")
    if n < 0:
        raise DomainError("tail_zeta", n, "requires n >= 0")
    with ctx.workdps():
        if n == 0:
            return riemann_zeta(p, ctx)
        sign = 1 if p % 2 == 0 else -1
        return sign * polygamma(p - 1, n + 1, ctx) / math.factorial(p - 1)


def tail_zeta_stream(p: int, start: int, ctx: PrecisionContext) -> Iterator[mpf]:
    """Yield tail_zeta(p, n) for n = start, start+1, ... by subtraction."""
    with ctx.workdps():
        value = tail_zeta(p, start, ctx)
    n = start
    while True:
        yield value
        n += 1
        with ctx.workdps():
            value = value - mpf(n) ** (-p)


def harmonic_stream(start: int, ctx: PrecisionContext, p: int = 1) -> Iterator[mpf]:
    """Yield H_n^(p) for n = start, start+1, ... incrementally."""
    with ctx.workdps():
        value = to_mpf(gen_harmonic(start, p)) if start <= EXACT_INDEX_LIMIT or p > 1 \
            else harmonic_real(start, ctx)
    n = start
    while True:
        yield value
        n += 1
        with ctx.workdps():
            value = value + mpf(n) ** (-p)


def skew_harmonic_stream(start: int, ctx: PrecisionContext) -> Iterator[mpf]:
    """Yield skew-harmonic numbers from index start incrementally."""
    with ctx.workdps():
        value = skew_harmonic_real(start, ctx)
    n = start
    while True:
        yield value
        n += 1
        with ctx.workdps():
            value = value + (mpf(1) if n % 2 == 1 else mpf(-1)) / n


def exp_tail(y: Number, n: int, ctx: PrecisionContext) -> mpf:
    """
    Exponential tail e^y - sum_{j<=n} y^j/j!.

    Evaluated as the remainder series sum_{j>n} y^j/j!, never as a
    difference of two close numbers.
    """
    if n < 0:
        raise DomainError("exp_tail", n, "requires n >= 0")
    extra = int(abs(float(to_mpf(y))) * 0.4343) + 5
    with ctx.workdps(extra):
        y = to_mpf(y)
        if y == 0:
            return mpf(0)
        eps = ctx.epsilon()
        term = y ** (n + 1) / math.factorial(n + 1)
        total = term
        j = n + 1
        while True:
            j += 1
            term = term * y / j
            total += term
            if j > abs(y) and abs(term) <= eps * abs(total):
                break
    with ctx.workdps():
        return +total


def frac_ne(n: int, ctx: PrecisionContext) -> mpf:
    """Fractional part of n! e, computed as n! * exp_tail(1, n)."""
    if n < 1:
        raise DomainError("frac_ne", n, "requires n >= 1")
    tail = exp_tail(1, n, ctx)
    with ctx.workdps():
        return math.factorial(n) * tail


def gf_tail_zeta2(x: Number, ctx: PrecisionContext) -> mpf:
    """sum_{n>=1} (zeta(2) - H_n^(2)) x^n = (x zeta(2) - Li_2(x)) / (1 - x) on [-1, 1)."""
    with ctx.workdps():
        x = to_mpf(x)
        if not -1 <= x < 1:
            raise DomainError("gf_tail_zeta2", x, "requires -1 <= x < 1")
        if x == 0:
            return mpf(0)
        return (x * riemann_zeta(2, ctx) - polylog(2, x, ctx)) / (1 - x)


def gf_tail_zeta3_over_n(x: Number, ctx: PrecisionContext) -> mpf:
    """
    sum_{n>=1} (zeta(3) - H_n^(3)) x^n / n on [-1, 1].

    log(1-x)[Li_3(x) - zeta(3)] - Li_4(x) + Li_2(x)^2/2, and zeta(4)/4 at x = 1.
    """
    with ctx.workdps():
        x = to_mpf(x)
        if not -1 <= x <= 1:
            raise DomainError("gf_tail_zeta3_over_n", x, "requires -1 <= x <= 1")
        if x == 1:
            return riemann_zeta(4, ctx) / 4
        if x == 0:
            return mpf(0)
        li2 = polylog(2, x, ctx)
        return (mp.log1p(-x) * (polylog(3, x, ctx) - riemann_zeta(3, ctx))
                - polylog(4, x, ctx) + li2 * li2 / 2)


def gf_exp_tail(x: Number, y: Number, ctx: PrecisionContext) -> mpf:
    """sum_{n>=0} exp_tail(y, n) x^n: (e^y - e^(xy))/(1-x), and y e^y at x = 1."""
    with ctx.workdps():
        x, y = to_mpf(x), to_mpf(y)
        if not 0 <= x <= 1:
            raise DomainError("gf_exp_tail", x, "requires 0 <= x <= 1")
        if x == 1:
            return y * mp.exp(y)
        return (mp.exp(y) - mp.exp(x * y)) / (1 - x)
