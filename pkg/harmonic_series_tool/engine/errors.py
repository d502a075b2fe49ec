"""
Errors Module

Custom warnings and errors for high-precision evaluation.
Provides specialized error classes for domain, convergence and registry issues.
"""


class PrecisionWarning(UserWarning):
    """
    Warning raised when an extrapolation system is ill-conditioned.

    A badly conditioned tail-model system amplifies rounding in the partial
    sums. This typically indicates:
    - Checkpoints placed too close together
    - Nearly dependent basis functions
    - Too few guard digits for the size of the model
    """
    pass


class HarmonicToolError(Exception):
    """Base class for all errors raised by the tool."""
    pass


class DomainError(HarmonicToolError, ValueError):
    """
    Error raised when an argument lies outside a function's real domain.

    Examples: log of a non-positive number, ζ at its pole s = 1, a polylog
    argument with |z| > 1.
    """

    def __init__(self, function: str, argument, reason: str = ""):
        self.function = function
        self.argument = argument
        message = f"{function}: argument {argument} outside domain"
        if reason:
            message += f" ({reason})"
        super().__init__(message)


class NonFiniteError(HarmonicToolError, ArithmeticError):
    """
    Error raised when a computation produced an infinity or NaN.

    Kernel results are always finite; a non-finite value indicates an
    overflow in an intermediate quantity or an evaluation exactly at a
    singularity.
    """
    pass


class ConvergenceError(HarmonicToolError):
    """
    Error raised when an iterative scheme fails to converge.

    Convergence failure can indicate:
    - An integrand with a stronger than logarithmic endpoint singularity
    - A requested precision beyond the configured level limit
    - An integrand that is not evaluated to working precision
    """

    def __init__(self, message: str, estimates=None):
        self.estimates = tuple(estimates or ())
        super().__init__(message)


class BudgetExhaustedError(ConvergenceError):
    """
    Error raised when direct summation hits its term budget.

    The declared decay is too slow to reach the target accuracy within the
    configured number of terms. The achieved number of digits is reported.
    """

    def __init__(self, series: str, achieved_digits: int, terms: int):
        self.series = series
        self.achieved_digits = achieved_digits
        self.terms = terms
        super().__init__(
            f"{series}: term budget of {terms} exhausted with only "
            f"{achieved_digits} digits certified"
        )


class ExtrapolationError(ConvergenceError):
    """
    Error raised when the asymptotic-tail extrapolation is unstable.

    The estimates obtained from two different cutoffs disagree beyond the
    requested tolerance. This usually means the declared tail model misses a
    term of the true asymptotic expansion, or the cutoff is too small.
    """
    pass


class PrecisionLossError(HarmonicToolError):
    """
    Error raised when a value moves by more than its own error estimate.

    Recomputing with extra guard digits is the honesty check for every
    reported error estimate.
    """
    pass


class UnknownIdentityError(HarmonicToolError, KeyError):
    """Error raised for an identity id absent from the catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown identity"


class UnknownFamilyError(HarmonicToolError, KeyError):
    """Error raised for an integrand family absent from the catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown integrand family"


class ParameterError(HarmonicToolError, ValueError):
    """
    Error raised when an identity parameter is outside its schema.

    Covers unknown parameter names, non-integer values for integer
    parameters and values outside the declared domain.
    """
    pass


class ExpressionSyntaxError(HarmonicToolError, ValueError):
    """Error raised when expression text cannot be parsed."""
    pass


class IdentityEvaluationError(HarmonicToolError):
    """
    Error raised when one side of a catalog identity cannot be evaluated.

    Wraps the engine error with the identity id and side attached.
    """

    def __init__(self, identity_id: str, side: str, cause: Exception):
        self.identity_id = identity_id
        self.side = side
        self.cause = cause
        super().__init__(f"{identity_id} ({side}): {type(cause).__name__}: {cause}")
