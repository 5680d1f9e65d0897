"""Exception hierarchy shared by every module of the package."""


class DesarguesError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(DesarguesError):
    pass


class FieldMismatch(FieldError, TypeError):
    """Arithmetic between scalars of fields with no common tower."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class CharacteristicTwo(FieldError, ValueError):
    """Fields of characteristic 2 are excluded."""


class AlreadySquare(FieldError, ValueError):
    """Adjoining a square root of an element that is already a square."""


class DegenerateConfiguration(DesarguesError, ValueError):
    pass


class SingularMatrix(DesarguesError, ValueError):
    pass


class ZeroForm(DesarguesError, ValueError):
    pass


class DegenerateForm(DesarguesError, ValueError):
    pass


class DependentPairs(DesarguesError, ValueError):
    pass


class DegenerateComplement(DesarguesError, ValueError):
    """The two point pairs share a point, so no involution realizes both."""


class DimensionMismatch(DesarguesError, ValueError):
    pass


class ZeroCoefficients(DesarguesError, ValueError):
    pass


class NotRegular(DesarguesError):
    """Raised by ``induced_involution`` when the restricted pencil is not regular.

    The diagnosis that failed is attached as ``verdict``.
    """

    def __init__(self, verdict):
        super().__init__(f"restricted pencil is not regular: {verdict}")
        self.verdict = verdict


class ContractViolation(DesarguesError, AssertionError):
    """A conjugacy check failed. This signals a bug, never a valid input."""


class HypothesisViolation(DesarguesError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class DegeneratePosition(DesarguesError, ValueError):
    pass


class InputError(DesarguesError, ValueError):
    """Bad JSON input; ``path`` locates the offending value."""

    def __init__(self, path: str, rule: str):
        super().__init__(f"{path}: {rule}" if path else rule)
        self.path = path
        self.rule = rule


class ParseError(InputError):
    pass


class SchemaError(InputError):
    pass


class InvariantError(InputError):
    pass
