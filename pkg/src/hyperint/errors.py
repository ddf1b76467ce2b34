"""Exception hierarchy shared by every hyperint module."""


class HyperintError(Exception):
    """Base class for all library errors."""


class DomainError(HyperintError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ScopeError(DomainError):
    """Exponent combination outside the supported parameter ranges."""


class PoleError(DomainError):
    """Evaluation at a pole (gamma at a non-positive integer)."""


class InvalidParameterError(DomainError):
    """Hypergeometric parameters that make the series undefined."""


class SingularityError(DomainError):
    """A definite integral would cross a non-integrable singularity."""


class DivergenceError(DomainError):
    """An improper integral does not converge."""


class ResourceError(HyperintError):
    """Requested work exceeds a built-in size bound."""


class NumericOverflowError(HyperintError, OverflowError):
    """Result exceeds the floating range.

    ``value`` carries the signed infinity the computation was heading to.
    """

    def __init__(self, message, value=float("inf")):
        super().__init__(message)
        self.value = value
