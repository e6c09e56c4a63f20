"""Exception types shared across the package.

The CLI maps these to exit codes: bad input / unusable parameters -> 2,
enumeration guards -> 3, failed internal cross-checks -> 4.
"""


class DisczetaError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DisczetaError, ValueError):
    """Invalid argument or parameter combination."""


class DivergenceError(InputError):
    """An evaluation that cannot converge (e.g. t = L^-m with m <= dim X)."""


class SymbolicEvaluationError(InputError):
    """Coefficients are not expressible in L; caller should specialize first."""


class ModelDataError(InputError):
    """An X-model lacks the data needed for the requested computation."""


class GuardExceeded(DisczetaError):
    """An enumeration would exceed its state-space guard."""


class InternalCheckError(DisczetaError):
    """An internal consistency cross-check failed; indicates a bug."""
