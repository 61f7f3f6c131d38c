"""Exception hierarchy shared by all genfermat modules.

Exit-code mapping used by the CLI:
  ParameterError (and subclasses) -> 2
  ResourceLimitError              -> 3
  VerificationError               -> 4
"""


class GenFermatError(Exception):
    """Base class for all genfermat errors."""


class ParameterError(GenFermatError, ValueError):
    """Invalid parameters or inputs outside an operation's domain."""


class DimensionError(ParameterError):
    """Vector/matrix length does not match the ambient parameters."""


class UnsupportedParameterError(ParameterError):
    """Parameters are syntactically valid but outside the supported range
    (e.g. composite p for subgroup linear algebra)."""


class ResourceLimitError(GenFermatError, RuntimeError):
    """A configured enumeration/size cap was exceeded."""

    def __init__(self, message, attempted=None):
        super().__init__(message)
        self.attempted = attempted


class InconsistencyError(GenFermatError, RuntimeError):
    """Internal contradiction detected (invalid input data or broken invariant)."""


class VerificationError(GenFermatError, RuntimeError):
    """A golden-value reproduction check did not match."""
