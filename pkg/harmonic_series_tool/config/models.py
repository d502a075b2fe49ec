"""
Data Models for Series Evaluation and Identity Verification

Core data structures used throughout the harmonic series tool.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import (TYPE_CHECKING, Any, Callable, Dict, Iterator, List,
                    Optional, Tuple)

import pandas as pd
from mpmath import mpf

from .settings import get_settings

if TYPE_CHECKING:
    from ..engine.numkernel import PrecisionContext


class ConstantName(Enum):
    """Named constants with a dedicated evaluation routine."""
    EULER_GAMMA = "EulerGamma"
    PI = "Pi"
    LOG_TWO = "LogTwo"
    GLAISHER = "Glaisher"
    CATALAN = "Catalan"
    LEMNISCATE = "Lemniscate"
    GIESEKING = "Gieseking"
    EULER_GOMPERTZ = "EulerGompertz"


class ElementaryFunction(Enum):
    """Elementary real functions exposed by the kernel."""
    EXP = "exp"
    LOG = "log"
    SQRT = "sqrt"
    COSH = "cosh"
    ATANH = "atanh"
    POW = "pow"


class SignPattern(Enum):
    """Sign behaviour of a series summand."""
    ALTERNATING = "alternating"
    EVENTUALLY_POSITIVE = "eventually-positive"
    GENERAL = "general"


class DecayKind(Enum):
    """Decay class families."""
    FACTORIAL = "factorial"
    GEOMETRIC = "geometric"
    POWER_LOG = "power_log"


class SumMethod(Enum):
    """How a value was obtained."""
    DIRECT = "direct"
    ALTERNATING_ACCEL = "cvz"
    ASYMPTOTIC_TAIL = "asymptotic-tail"
    ABEL = "abel"
    QUADRATURE = "tanh-sinh"
    FORMULA = "formula"
    EXPRESSION = "expression"


class ReportStatus(Enum):
    """Outcome of one identity verification."""
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class ParamKind(Enum):
    """Parameter types accepted by identity records."""
    INTEGER = "integer"
    RATIONAL = "rational"


@dataclass(frozen=True)
class DecayClass:
    """
    Upper-bound decay class of |a_n|.

    factorial: |a_n| <= C r^n / n!
    geometric(r): |a_n| <= C r^n
    power_log(m, j): |a_n| <= C log^j(n) / n^m
    """
    kind: DecayKind
    ratio: float = 0.0
    exponent: float = 0.0
    log_power: int = 0

    @classmethod
    def factorial(cls) -> 'DecayClass':
        return cls(DecayKind.FACTORIAL)

    @classmethod
    def geometric(cls, ratio: float) -> 'DecayClass':
        if not 0 <= ratio < 1:
            raise ValueError(f"geometric ratio must lie in [0, 1), got {ratio}")
        return cls(DecayKind.GEOMETRIC, ratio=float(ratio))

    @classmethod
    def power_log(cls, exponent: float, log_power: int = 0) -> 'DecayClass':
        return cls(DecayKind.POWER_LOG, exponent=float(exponent), log_power=log_power)

    def __str__(self) -> str:
        if self.kind == DecayKind.GEOMETRIC:
            return f"geometric({self.ratio:g})"
        if self.kind == DecayKind.POWER_LOG:
            return f"power_log({self.exponent:g}, {self.log_power})"
        return self.kind.value


TermFunction = Callable[[int, 'PrecisionContext'], mpf]
TermStream = Callable[[int, 'PrecisionContext'], Iterator[mpf]]


@dataclass
class SeriesSpec:
    """
    A summand plus the convergence metadata the engines rely on.

    `term(n, ctx)` must be evaluable at any index >= start_index under the
    active precision of ctx. `stream(start, ctx)` is an optional sequential
    generator yielding term(start), term(start + 1), ... faster than random
    access. `offset(ctx)` is a constant added to every summation result
    (used for the declared limit of an Abel transform).
    """
    name: str
    term: TermFunction
    sign_pattern: SignPattern
    decay: DecayClass
    start_index: int = 1
    stream: Optional[TermStream] = None
    offset: Optional[Callable[['PrecisionContext'], mpf]] = None
    term_budget: Optional[int] = None

    def __post_init__(self):
        if self.start_index < 0:
            raise ValueError(f"{self.name}: start_index must be non-negative")

    def iter_terms(self, start: int, ctx: 'PrecisionContext') -> Iterator[mpf]:
        """Yield consecutive terms beginning at index `start`."""
        if self.stream is not None:
            yield from self.stream(start, ctx)
            return
        n = start
        while True:
            yield self.term(n, ctx)
            n += 1


@dataclass
class SumResult:
    """Result of a summation engine."""
    value: mpf
    terms_used: int
    method: SumMethod
    est_error: mpf


@dataclass
class Integrand:
    """Integrand on an open finite interval."""
    f: Callable[[mpf, 'PrecisionContext'], mpf]
    interval: Tuple[Any, Any] = (0, 1)
    singularity_note: str = ""
    name: str = ""


@dataclass
class QuadratureResult:
    """Result of tanh-sinh quadrature."""
    value: mpf
    est_error: mpf
    levels: int
    evaluations: int


@dataclass
class Evaluation:
    """One evaluated side of an identity."""
    value: mpf
    est_error: mpf
    method: SumMethod


@dataclass(frozen=True)
class ParamSpec:
    """Schema of one identity parameter."""
    name: str
    kind: ParamKind
    default: Fraction
    minimum: Optional[Fraction] = None
    maximum: Optional[Fraction] = None
    exclusive_minimum: bool = False
    description: str = ""

    def domain_text(self) -> str:
        """Human readable domain, e.g. 'integer >= 1'."""
        parts = [self.kind.value]
        if self.minimum is not None:
            parts.append(f"{'>' if self.exclusive_minimum else '>='} {self.minimum}")
        if self.maximum is not None:
            parts.append(f"<= {self.maximum}")
        return " ".join(parts)

    def contains(self, value: Fraction) -> bool:
        """Check a value against the declared domain."""
        if self.kind == ParamKind.INTEGER and value.denominator != 1:
            return False
        if self.minimum is not None:
            if value < self.minimum or (self.exclusive_minimum and value == self.minimum):
                return False
        if self.maximum is not None and value > self.maximum:
            return False
        return True


@dataclass(frozen=True)
class Citation:
    """Where an identity comes from: subject area, a short description and a quote anchor."""
    topic: str
    note: str
    quote: str


Params = Dict[str, Fraction]


@dataclass(frozen=True)
class EvaluationPlan:
    """How one side of an identity is evaluated."""
    method: SumMethod
    evaluate: Callable[[Params, 'PrecisionContext'], Evaluation]
    description: str = ""
    source: Any = None     # The builder or routine the plan wraps


@dataclass(frozen=True)
class IdentityRecord:
    """One identity: parameter schema, both sides, citation."""
    id: str
    title: str
    params: Tuple[ParamSpec, ...]
    lhs: EvaluationPlan
    rhs: EvaluationPlan
    citation: Citation
    default_digits: Optional[int] = None    # None: the configured verification threshold
    lhs_alternatives: Tuple[EvaluationPlan, ...] = ()
    rhs_alternatives: Tuple[EvaluationPlan, ...] = ()
    sweep: Tuple[Dict[str, Fraction], ...] = ()
    constraint: Optional[Callable[[Params], Optional[str]]] = None

    def default_params(self) -> Params:
        return {p.name: p.default for p in self.params}

    @property
    def independent(self) -> bool:
        """True when no left-hand plan shares its routine with a right-hand plan."""
        lhs = (self.lhs,) + self.lhs_alternatives
        rhs = (self.rhs,) + self.rhs_alternatives
        for left in lhs:
            for right in rhs:
                if left is right or (left.source is not None and left.source is right.source):
                    return False
        return True

    def threshold(self) -> int:
        """Digits both sides must share to pass."""
        return self.default_digits or get_settings().verification.default_threshold

    def summary(self) -> Dict[str, Any]:
        """Plain-dict summary for listings."""
        return {
            'id': self.id,
            'title': self.title,
            'params': {p.name: p.domain_text() for p in self.params},
            'lhs': self.lhs.method.value,
            'rhs': self.rhs.method.value,
            'default_digits': self.threshold(),
            'topic': self.citation.topic,
            'note': self.citation.note,
            'quote': self.citation.quote,
        }


@dataclass
class VerificationPolicy:
    """Controls a verification run."""
    digits: Optional[int] = None        # None: use each record's default
    method: Optional[str] = None        # Force an LHS plan by method name
    check_errors: bool = False          # Recompute with extra guard digits
    workers: int = 1


@dataclass
class VerificationReport:
    """Outcome of verifying one identity at one parameter binding."""
    id: str
    params: Dict[str, str]
    lhs: Optional[str]
    rhs: Optional[str]
    matched_digits: int
    method: str
    elapsed_ms: int
    status: ReportStatus

    @property
    def passed(self) -> bool:
        return self.status == ReportStatus.PASS

    def params_text(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.params.items())

    def to_dict(self) -> Dict[str, Any]:
        """Serialize with exactly the report schema fields."""
        return {
            'id': self.id,
            'params': dict(self.params),
            'lhs': self.lhs,
            'rhs': self.rhs,
            'matched_digits': self.matched_digits,
            'method': self.method,
            'elapsed_ms': self.elapsed_ms,
            'status': self.status.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        return cls(
            id=data['id'],
            params={str(k): str(v) for k, v in data['params'].items()},
            lhs=data['lhs'],
            rhs=data['rhs'],
            matched_digits=int(data['matched_digits']),
            method=data['method'],
            elapsed_ms=int(data['elapsed_ms']),
            status=ReportStatus(data['status']),
        )


def reports_to_dataframe(reports: List[VerificationReport]) -> pd.DataFrame:
    """Convert verification reports to a pandas DataFrame."""
    data = []
    for report in reports:
        data.append({
            'ID': report.id,
            'Params': report.params_text(),
            'Matched': report.matched_digits,
            'Status': report.status.value,
            'Method': report.method,
            'ms': report.elapsed_ms,
        })
    return pd.DataFrame(data, columns=['ID', 'Params', 'Matched', 'Status', 'Method', 'ms'])


def identities_to_dataframe(records: List[IdentityRecord]) -> pd.DataFrame:
    """Convert identity records to a pandas DataFrame."""
    data = []
    for record in records:
        summary = record.summary()
        data.append({
            'ID': record.id,
            'Params': ", ".join(f"{k}: {v}" for k, v in summary['params'].items()),
            'LHS': summary['lhs'],
            'RHS': summary['rhs'],
            'Digits': record.threshold(),
            'Topic': record.citation.topic,
            'Quote': record.citation.quote,
        })
    return pd.DataFrame(data, columns=['ID', 'Params', 'LHS', 'RHS', 'Digits', 'Topic', 'Quote'])
