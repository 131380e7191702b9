"""Exception hierarchy.

Every error carries a stable ``code`` (its class name) so the CLI can emit
machine-parsable records. ``ValidationError`` subclasses signal bad input
(exit status 1); ``ComputationError`` subclasses signal that a well-formed
request could not be carried out (exit status 2).
"""


class RingCodesError(Exception):
    exit_status = 2

    @property
    def code(self) -> str:
        return type(self).__name__


class ValidationError(RingCodesError, ValueError):
    exit_status = 1


class ComputationError(RingCodesError, ArithmeticError):
    exit_status = 2


class NotPrime(ValidationError):
    pass


class ModulusTooLarge(ValidationError):
    pass


class ResidueOutOfRange(ValidationError):
    pass


class ModulusMismatch(ValidationError):
    pass


class RingMismatch(ValidationError):
    pass


class IndexNotInIs(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class WrongComponentCount(ValidationError):
    pass


class CoefficientOutOfRange(ValidationError):
    pass


class PolySyntaxError(ValidationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidGenerator(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class DivisionByZeroPoly(ComputationError, ZeroDivisionError):
    pass


class NotAUnit(ComputationError):
    def __init__(self, message: str, zero_components: tuple[int, ...] = ()):
        super().__init__(message)
        self.zero_components = zero_components


class EnumerationCapExceeded(ComputationError):
    pass


class AllComponentsZero(ComputationError):
    pass


class RankDeficient(ComputationError):
    pass


class NotSystematic(ComputationError):
    pass


class DoesNotSplit(ComputationError):
    def __init__(self, message: str, residual_degree: int):
        super().__init__(message)
        self.residual_degree = residual_degree
