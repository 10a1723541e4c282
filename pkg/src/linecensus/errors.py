"""Exception types shared across the toolkit."""


class LineCensusError(Exception):
    """Base class for all toolkit errors."""


# field construction and arithmetic

class NonPrimeCharacteristic(LineCensusError):
    pass


class ReducibleModulus(LineCensusError):
    pass


class DegreeTooLarge(LineCensusError):
    pass


class NoEmbedding(LineCensusError):
    pass


class FieldMismatch(LineCensusError):
    """Operands belong to different field specs."""


# polynomial layer

class PolynomialSyntaxError(LineCensusError):
    """Parse failure; carries the character position of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CoefficientOutOfField(LineCensusError):
    pass


class DependentSpan(LineCensusError):
    pass


class ZeroForm(LineCensusError):
    pass


class ZeroDivisor(LineCensusError):
    pass


class EvenCharacteristic(LineCensusError):
    pass


# Groebner engine

class DegreeCapExceeded(LineCensusError):
    """Raised when an S-polynomial's degree passes the cap.

    Carries the partial basis computed so far and the offending degree so
    callers can fall back to heuristics.
    """

    def __init__(self, degree: int, partial):
        super().__init__(f"intermediate degree {degree} exceeded the cap")
        self.degree = degree
        self.partial = partial


class IncompleteBasis(LineCensusError):
    pass


# projective geometry

class ExtensionTooLarge(LineCensusError):
    pass


class SingularPoint(LineCensusError):
    pass


class PointNotOnSurface(LineCensusError):
    pass


# census and gallery

class ZeroSurface(LineCensusError):
    pass


class BudgetExceeded(LineCensusError):
    pass


class NoSmoothFound(LineCensusError):
    pass
