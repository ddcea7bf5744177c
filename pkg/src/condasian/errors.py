"""Exception hierarchy for the pricing engine.

Numerical failures are deliberately loud: every kernel that can lose
precision reports how much it lost, and callers either escalate to a more
robust evaluation path or raise one of these.
"""


class CondAsianError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CondAsianError, ValueError):
    """A parameter set violates a documented invariant."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class ConfigError(CondAsianError, ValueError):
    """A configuration file or flag set could not be parsed/validated."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class NumericalError(CondAsianError, ArithmeticError):
    """Base class for runtime numerical failures."""


class PoleError(NumericalError):
    """A function was evaluated at (or too close to) one of its poles."""


class ConvergenceError(NumericalError):
    """A series or iteration failed to converge.

    Carries the number of terms consumed and the magnitude of the last
    increment so the caller can decide whether to retry with a larger
    budget.
    """

    def __init__(self, message, terms=None, last_increment=None):
        super().__init__(message)
        self.terms = terms
        self.last_increment = last_increment


class CancellationError(NumericalError):
    """A formula lost too many significant digits to cancellation.

    ``digits_lost`` estimates how many decimal digits were destroyed, which
    doubles as a hint for the working precision needed by a retry.
    """

    def __init__(self, message, digits_lost=None):
        super().__init__(message)
        self.digits_lost = digits_lost


class InversionError(NumericalError):
    """A numerical Laplace inversion produced unusable output."""


class TruncationError(NumericalError):
    """A tail-truncation bound could not be satisfied.

    Usually indicates a branch error upstream: the integrand envelope must
    decay for the truncation point to exist.
    """
