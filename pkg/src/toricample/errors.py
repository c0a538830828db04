"""Exception hierarchy.

The CLI maps these onto exit codes: ``DocumentError`` is an input problem
(1), ``ValidationError`` and its subclasses are geometric validation
failures (2), ``ConsistencyError`` means two independent computations
disagreed (3).
"""


class ToricError(Exception):
    pass


class DocumentError(ToricError, ValueError):
    """Malformed fan or divisor document."""


class ValidationError(ToricError, ValueError):
    """Input is well-formed but geometrically invalid."""


class LatticeError(ValidationError):
    pass


class FanError(ValidationError):
    pass


class DivisorNotAmpleError(ValidationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConsistencyError(ToricError, RuntimeError):
    """Raised when a cross-check between two code paths fails (a bug)."""
