"""
Euler Sum Module

Symbolic closed forms with exact rational coefficients over a basis of
constants (zeta and eta values, log 2, Li_k(1/2), gamma, log pi, log A,
Catalan, log G and log Gamma at rationals).

Provides the classical Euler sum formula, the formula for the alternating
sums sum (-1)^(n-1) H_n^(p) / n^q with p + q odd, the closed form of
int_0^1 log^q(1+x)/x dx, normalization, evaluation and a text format.
"""
import itertools
import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from mpmath import mp, mpf

from ..config.models import (ConstantName, DecayClass, SeriesSpec, SignPattern)
from .errors import DomainError, ExpressionSyntaxError
from .numkernel import PrecisionContext, agree_digits, constant, to_mpf
from .specfun import (dirichlet_eta, log_barnes_g, loggamma, polylog,
                      riemann_zeta)

logger = logging.getLogger(__name__)


class SymbolKind(Enum):
    ZETA = "zeta"
    ETA = "eta"
    LI_HALF = "Li"
    LOG_TWO = "log2"
    PI_SQUARED = "pi2"
    EULER_GAMMA = "gamma"
    LOG_PI = "logpi"
    LOG_GLAISHER = "logA"
    CATALAN = "catalan"
    LOG_BARNES_G = "logG"
    LOG_GAMMA = "logGamma"


_KIND_ORDER = {kind: i for i, kind in enumerate(SymbolKind)}


@dataclass(frozen=True)
class BasisSymbol:
    """One constant of the basis; `index` for zeta/eta/Li, `argument` for logG/logGamma."""
    kind: SymbolKind
    index: int = 0
    argument: Fraction = Fraction(0)

    def sort_key(self) -> Tuple[int, int, Fraction]:
        return (_KIND_ORDER[self.kind], self.index, self.argument)

    def __str__(self) -> str:
        if self.kind in (SymbolKind.ZETA, SymbolKind.ETA):
            return f"{self.kind.value}({self.index})"
        if self.kind == SymbolKind.LI_HALF:
            return f"Li({self.index},1/2)"
        if self.kind in (SymbolKind.LOG_BARNES_G, SymbolKind.LOG_GAMMA):
            return f"{self.kind.value}({self.argument})"
        return self.kind.value


def zeta(k: int) -> BasisSymbol:
    return BasisSymbol(SymbolKind.ZETA, k)


def eta(k: int) -> BasisSymbol:
    return BasisSymbol(SymbolKind.ETA, k)


def li_half(k: int) -> BasisSymbol:
    return BasisSymbol(SymbolKind.LI_HALF, k)


LOG2 = BasisSymbol(SymbolKind.LOG_TWO)
PI2 = BasisSymbol(SymbolKind.PI_SQUARED)
GAMMA = BasisSymbol(SymbolKind.EULER_GAMMA)
LOGPI = BasisSymbol(SymbolKind.LOG_PI)
LOGA = BasisSymbol(SymbolKind.LOG_GLAISHER)
CATALAN = BasisSymbol(SymbolKind.CATALAN)


def log_g(a) -> BasisSymbol:
    return BasisSymbol(SymbolKind.LOG_BARNES_G, argument=Fraction(a))


def log_gamma(a) -> BasisSymbol:
    return BasisSymbol(SymbolKind.LOG_GAMMA, argument=Fraction(a))


# A monomial is a sorted tuple of (symbol, exponent >= 1)
Monomial = Tuple[Tuple[BasisSymbol, int], ...]
Scalar = Union[int, Fraction]


def _monomial(factors: Dict[BasisSymbol, int]) -> Monomial:
    return tuple(sorted(((s, p) for s, p in factors.items() if p > 0),
                        key=lambda item: item[0].sort_key()))


def _monomial_key(mono: Monomial):
    return tuple((s.sort_key(), p) for s, p in mono)


def _multiply_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    factors: Dict[BasisSymbol, int] = dict(m1)
    for s, p in m2:
        factors[s] = factors.get(s, 0) + p
    return _monomial(factors)


class Expression:
    """
    Sum of rational multiples of monomials in BasisSymbols.

    Always stored combined: no zero coefficients, no duplicate monomials,
    monomials in canonical order.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Iterable[Tuple[Scalar, Monomial]]] = None):
        combined: Dict[Monomial, Fraction] = {}
        for coeff, mono in terms or ():
            combined[mono] = combined.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms: Tuple[Tuple[Fraction, Monomial], ...] = tuple(
            (combined[m], m) for m in sorted(combined, key=_monomial_key) if combined[m] != 0)

    @classmethod
    def zero(cls) -> 'Expression':
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> 'Expression':
        return cls([(value, ())])

    @classmethod
    def symbol(cls, sym: BasisSymbol, power: int = 1, coeff: Scalar = 1) -> 'Expression':
        return cls([(coeff, ((sym, power),))])

    @property
    def terms(self) -> Tuple[Tuple[Fraction, Monomial], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def symbols(self) -> List[BasisSymbol]:
        seen = {s for _, mono in self._terms for s, _ in mono}
        return sorted(seen, key=BasisSymbol.sort_key)

    @staticmethod
    def _coerce(other) -> 'Expression':
        if isinstance(other, Expression):
            return other
        if isinstance(other, (int, Fraction)):
            return Expression.constant(other)
        if isinstance(other, BasisSymbol):
            return Expression.symbol(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Expression(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return Expression((-c, m) for c, m in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Expression((c1 * c2, _multiply_monomials(m1, m2))
                          for c1, m1 in self._terms for c2, m2 in other._terms)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        result = Expression.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Expression):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"Expression({format_expression(self)!r})"

    def __str__(self):
        return format_expression(self)


def _symbol_rewrite(sym: BasisSymbol) -> Optional[Expression]:
    """One rewrite step for a symbol, or None when it is already canonical."""
    if sym.kind == SymbolKind.ETA:
        k = sym.index
        if k == 1:
            return Expression.symbol(LOG2)
        # eta(k) = (1 - 2^(1-k)) zeta(k)
        return Expression.symbol(zeta(k), coeff=1 - Fraction(1, 2 ** (k - 1)))
    if sym.kind == SymbolKind.PI_SQUARED:
        return Expression.symbol(zeta(2), coeff=6)
    if sym.kind == SymbolKind.LI_HALF:
        k = sym.index
        if k == 1:
            return Expression.symbol(LOG2)
        if k == 2:
            return Expression.symbol(zeta(2), coeff=Fraction(1, 2)) \
                - Expression.symbol(LOG2, 2, Fraction(1, 2))
        if k == 3:
            return (Expression.symbol(zeta(3), coeff=Fraction(7, 8))
                    + Expression.symbol(LOG2, 3, Fraction(1, 6))
                    - Fraction(1, 2) * Expression.symbol(zeta(2)) * Expression.symbol(LOG2))
    return None


def _rewrite_once(e: Expression) -> Expression:
    result = Expression.zero()
    for coeff, mono in e.terms:
        product = Expression.constant(coeff)
        for sym, power in mono:
            replacement = _symbol_rewrite(sym)
            if replacement is None:
                # zeta(2)^2 = 5/2 zeta(4)
                if sym == zeta(2) and power >= 2:
                    factor = Expression.symbol(zeta(4), power // 2, Fraction(5, 2) ** (power // 2))
                    if power % 2:
                        factor = factor * Expression.symbol(zeta(2))
                    product = product * factor
                else:
                    product = product * Expression.symbol(sym, power)
            else:
                product = product * replacement ** power
        result = result + product
    return result


def normalize(e: Expression) -> Expression:
    """
    Canonical form: eta(k) and pi^2 rewritten through zeta, Li_k(1/2) for
    k <= 3 rewritten through log 2 and zeta, zeta(2)^2 = 5/2 zeta(4).
    Idempotent and value preserving.
    """
    current = e
    while True:
        rewritten = _rewrite_once(current)
        if rewritten == current:
            return current
        current = rewritten


expr_normalize = normalize


@dataclass(frozen=True)
class EulerConvention:
    """Index ranges and boundary values used by the alternating Euler sum formula."""
    min_j: int = 0
    min_i: int = 0
    min_k: int = 0
    eta_zero: Fraction = Fraction(1, 2)


# Calibrated against numeric summation; asserted by the test suite
FROZEN_CONVENTION = EulerConvention()


def _zeta_expr(k: int) -> Expression:
    if k == 1:
        # divergent factor, regularized to 0
        return Expression.zero()
    return Expression.symbol(zeta(k))


def _eta_expr(k: int, convention: EulerConvention) -> Expression:
    if k == 0:
        return Expression.constant(convention.eta_zero)
    return Expression.symbol(eta(k))


def euler_classical(k: int) -> Expression:
    """
    sum_{n>=1} H_n / n^k = (1 + k/2) zeta(k+1) - 1/2 sum_{n=1}^{k-2} zeta(k-n) zeta(n+1).

    Args:
        k: Power (>= 2)

    Returns:
        Normalized Expression
    """
    if k < 2:
        raise DomainError("euler_classical", k, "requires k >= 2")
    result = Expression.symbol(zeta(k + 1), coeff=1 + Fraction(k, 2))
    for n in range(1, k - 1):
        result = result - Fraction(1, 2) * Expression.symbol(zeta(k - n)) * Expression.symbol(zeta(n + 1))
    return normalize(result)


def euler_alternating(p: int, q: int,
                      convention: EulerConvention = FROZEN_CONVENTION) -> Expression:
    """
    sum_{n>=1} (-1)^(n-1) H_n^(p) / n^q for p + q odd.

    [(1 - (-1)^p) zeta(p) eta(q) + eta(p+q)] / 2
      + sum_{j+2k=p} C(q+j-1, q-1) (-1)^(j+1) eta(q+j) eta(2k)
      + (-1)^p sum_{i+2k=q} C(p+i-1, p-1) zeta(p+i) eta(2k)

    Args:
        p: Harmonic order (>= 1)
        q: Power (>= 2)
        convention: Index ranges and eta(0)

    Returns:
        Normalized Expression
    """
    if p < 1 or q < 2:
        raise DomainError("euler_alternating", (p, q), "requires p >= 1 and q >= 2")
    if (p + q) % 2 == 0:
        raise DomainError("euler_alternating", (p, q), "formula requires p + q odd")

    result = Fraction(1 - (-1) ** p, 2) * _zeta_expr(p) * _eta_expr(q, convention) \
        + Fraction(1, 2) * _eta_expr(p + q, convention)

    for k in range(convention.min_k, p // 2 + 1):
        j = p - 2 * k
        if j < convention.min_j:
            continue
        coeff = math.comb(q + j - 1, q - 1) * (-1) ** (j + 1)
        result = result + coeff * _eta_expr(q + j, convention) * _eta_expr(2 * k, convention)

    sign = (-1) ** p
    for k in range(convention.min_k, q // 2 + 1):
        i = q - 2 * k
        if i < convention.min_i:
            continue
        coeff = sign * math.comb(p + i - 1, p - 1)
        result = result + coeff * _zeta_expr(p + i) * _eta_expr(2 * k, convention)

    return normalize(result)


def alternating_euler_series(p: int, q: int) -> SeriesSpec:
    """SeriesSpec of (-1)^(n-1) H_n^(p) / n^q for numeric checks."""
    from .sequences import gen_harmonic

    def term(n: int, ctx: PrecisionContext) -> mpf:
        sign = 1 if n % 2 == 1 else -1
        return sign * to_mpf(gen_harmonic(n, p)) / mpf(n) ** q

    return SeriesSpec(
        name=f"alternating-euler({p},{q})",
        term=term,
        sign_pattern=SignPattern.ALTERNATING,
        decay=DecayClass.power_log(q, 1 if p == 1 else 0),
    )


def calibrate_alternating_convention(ctx: PrecisionContext,
                                     pairs: Iterable[Tuple[int, int]] = ((1, 2), (2, 3), (1, 4), (3, 4), (2, 5)),
                                     digits: Optional[int] = None) -> Optional[EulerConvention]:
    """
    Pick the index convention that reproduces numeric summation.

    Tries FROZEN_CONVENTION first, then every toggle of the lower index
    bounds. Returns the first convention matching all pairs, or None.
    """
    from .series import sum_alternating_accel

    digits = digits or ctx.target_digits
    pairs = list(pairs)
    oracles = {pair: sum_alternating_accel(alternating_euler_series(*pair), ctx).value
               for pair in pairs}
    candidates = [FROZEN_CONVENTION] + [
        EulerConvention(j, i, k) for j, i, k in itertools.product((0, 1), repeat=3)
        if (j, i, k) != (0, 0, 0)]
    for convention in candidates:
        matches = all(
            agree_digits(expr_eval(euler_alternating(p, q, convention), ctx), oracles[(p, q)], ctx)
            >= digits for p, q in pairs)
        if matches:
            logger.info(f"Alternating Euler sum convention calibrated: {convention}")
            return convention
    logger.error("No index convention reproduces the alternating Euler sums")
    return None


def log_power_integral_closed(q: int) -> Expression:
    """
    int_0^1 log^q(1+x)/x dx = log^(q+1)2/(q+1) + q! zeta(q+1)
                              - q! sum_{k=0}^{q} log^(q-k)2/(q-k)! Li_(k+1)(1/2)
    """
    if q < 1:
        raise DomainError("log_power_integral_closed", q, "requires q >= 1")
    fact = math.factorial(q)
    result = Expression.symbol(LOG2, q + 1, Fraction(1, q + 1)) \
        + Expression.symbol(zeta(q + 1), coeff=fact)
    for k in range(q + 1):
        coeff = Fraction(-fact, math.factorial(q - k))
        log_part = Expression.symbol(LOG2, q - k) if q > k else Expression.constant(1)
        result = result + coeff * log_part * Expression.symbol(li_half(k + 1))
    return normalize(result)


def symbol_value(sym: BasisSymbol, ctx: PrecisionContext) -> mpf:
    """Numeric value of one basis symbol."""
    kind = sym.kind
    if kind == SymbolKind.ZETA:
        return riemann_zeta(sym.index, ctx)
    if kind == SymbolKind.ETA:
        return dirichlet_eta(sym.index, ctx)
    if kind == SymbolKind.LI_HALF:
        return polylog(sym.index, Fraction(1, 2), ctx)
    if kind == SymbolKind.LOG_TWO:
        return constant(ConstantName.LOG_TWO, ctx)
    if kind == SymbolKind.PI_SQUARED:
        return constant(ConstantName.PI, ctx) ** 2
    if kind == SymbolKind.EULER_GAMMA:
        return constant(ConstantName.EULER_GAMMA, ctx)
    if kind == SymbolKind.LOG_PI:
        return mp.log(constant(ConstantName.PI, ctx))
    if kind == SymbolKind.LOG_GLAISHER:
        return mp.log(constant(ConstantName.GLAISHER, ctx))
    if kind == SymbolKind.CATALAN:
        return constant(ConstantName.CATALAN, ctx)
    if kind == SymbolKind.LOG_BARNES_G:
        return log_barnes_g(sym.argument, ctx)
    return loggamma(sym.argument, ctx)


def expr_eval(e: Expression, ctx: PrecisionContext) -> mpf:
    """Sum of coefficient times product of symbol values at working precision."""
    with ctx.workdps():
        values: Dict[BasisSymbol, mpf] = {s: symbol_value(s, ctx) for s in e.symbols()}
        total = mpf(0)
        for coeff, mono in e.terms:
            product = to_mpf(coeff)
            for sym, power in mono:
                product *= values[sym] ** power
            total += product
        return total


def format_expression(e: Expression) -> str:
    """
    Canonical text, e.g. "5/8*zeta(3) - 1/2*zeta(2)*zeta(3)".

    Grammar: terms joined by " + " / " - "; a term is an optional rational
    coefficient followed by "*"-joined symbols with optional "^n" powers.
    The empty expression prints as "0".
    """
    if e.is_zero():
        return "0"
    parts = []
    for index, (coeff, mono) in enumerate(e.terms):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        factors = [str(s) if p == 1 else f"{s}^{p}" for s, p in mono]
        if magnitude != 1 or not factors:
            factors.insert(0, str(magnitude))
        body = "*".join(factors)
        if index == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)(?:\((?P<args>[^()]*)\))?|(?P<op>[-+*/^]))")

_NULLARY = {
    'log2': LOG2,
    'pi2': PI2,
    'gamma': GAMMA,
    'logpi': LOGPI,
    'logA': LOGA,
    'catalan': CATALAN,
}


def _tokenize(text: str) -> List[Tuple[str, str, Optional[str]]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ExpressionSyntaxError(f"unexpected text at position {pos}: {text[pos:]!r}")
        if match.group('num'):
            tokens.append(('num', match.group('num'), None))
        elif match.group('name'):
            tokens.append(('name', match.group('name'), match.group('args')))
        else:
            tokens.append(('op', match.group('op'), None))
        pos = match.end()
    return tokens


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ExpressionSyntaxError(f"invalid rational argument {text!r}")


def _make_symbol(name: str, args: Optional[str]) -> BasisSymbol:
    if args is None:
        if name not in _NULLARY:
            raise ExpressionSyntaxError(f"unknown symbol {name!r}")
        return _NULLARY[name]
    if name in ('zeta', 'eta'):
        k = _parse_fraction(args)
        minimum = 2 if name == 'zeta' else 1
        if k.denominator != 1 or k < minimum:
            raise ExpressionSyntaxError(f"{name} index must be an integer >= {minimum}")
        return zeta(int(k)) if name == 'zeta' else eta(int(k))
    if name == 'Li':
        pieces = [p.strip() for p in args.split(',')]
        if len(pieces) != 2 or _parse_fraction(pieces[1]) != Fraction(1, 2):
            raise ExpressionSyntaxError(f"only Li(k,1/2) is supported, got Li({args})")
        k = _parse_fraction(pieces[0])
        if k.denominator != 1 or k < 1:
            raise ExpressionSyntaxError("Li order must be a positive integer")
        return li_half(int(k))
    if name == 'logG':
        return log_g(_parse_fraction(args))
    if name == 'logGamma':
        return log_gamma(_parse_fraction(args))
    raise ExpressionSyntaxError(f"unknown function {name!r}")


def parse_expression(text: str) -> Expression:
    """Parse the canonical text form; inverse of format_expression."""
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionSyntaxError("empty expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def parse_factor() -> Expression:
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ExpressionSyntaxError("unexpected end of expression")
        kind, value, args = tok
        pos += 1
        if kind == 'num':
            number = Fraction(int(value))
            nxt = peek()
            if nxt and nxt[0] == 'op' and nxt[1] == '/':
                pos += 1
                den = peek()
                if den is None or den[0] != 'num' or int(den[1]) == 0:
                    raise ExpressionSyntaxError("expected a non-zero integer denominator")
                pos += 1
                number = number / int(den[1])
            return Expression.constant(number)
        if kind == 'name':
            sym = _make_symbol(value, args)
            power = 1
            nxt = peek()
            if nxt and nxt[0] == 'op' and nxt[1] == '^':
                pos += 1
                exp_tok = peek()
                if exp_tok is None or exp_tok[0] != 'num' or int(exp_tok[1]) < 1:
                    raise ExpressionSyntaxError("expected a positive integer exponent")
                pos += 1
                power = int(exp_tok[1])
            return Expression.symbol(sym, power)
        raise ExpressionSyntaxError(f"unexpected operator {value!r}")

    def parse_term() -> Expression:
        nonlocal pos
        result = parse_factor()
        while True:
            tok = peek()
            if tok and tok[0] == 'op' and tok[1] == '*':
                pos += 1
                result = result * parse_factor()
            else:
                return result

    sign = 1
    tok = peek()
    if tok and tok[0] == 'op' and tok[1] in '+-':
        sign = -1 if tok[1] == '-' else 1
        pos += 1
    result = sign * parse_term()
    while pos < len(tokens):
        kind, value, _ = tokens[pos]
        if kind != 'op' or value not in '+-':
            raise ExpressionSyntaxError(f"expected '+' or '-', got {value!r}")
        pos += 1
        term = parse_term()
        result = result + term if value == '+' else result - term
    return result
