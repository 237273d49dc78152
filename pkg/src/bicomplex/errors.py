"""Exception types raised by the library.

Every error carries a short machine-readable ``code`` that the command line
front end copies into its JSON error envelope.
"""


class BicomplexError(Exception):
    """Base class for domain errors."""

    code = "DomainError"


class ZeroDivisor(BicomplexError, ZeroDivisionError):
    """The operand lies in the zero-divisor set or is zero."""

    code = "ZeroDivisor"


class EmptySet(BicomplexError, ValueError):
    code = "EmptySet"


class NotInCone(BicomplexError, ValueError):
    """A hyperbolic parameter was required to be in the positive cone."""

    code = "NotInCone"


class NonFinite(BicomplexError, ValueError):
    code = "NonFinite"


class ShapeMismatch(BicomplexError, ValueError):
    code = "ShapeMismatch"


class NotSquare(BicomplexError, ValueError):
    code = "NotSquare"


class Singular(BicomplexError, ZeroDivisionError):
    """A component matrix is numerically singular."""

    code = "Singular"

    def __init__(self, component: int, message: str | None = None):
        self.component = component
        super().__init__(message or f"component {component} is singular")


class NotPositive(BicomplexError, ValueError):
    code = "NotPositive"


class OutsideDomain(BicomplexError, ValueError):
    """A point has an idempotent component on or outside the unit circle."""

    code = "OutsideDomain"


class ZeroDivisorDenominator(BicomplexError, ZeroDivisionError):
    code = "ZeroDivisorDenominator"


class DegenerateParameter(BicomplexError, ValueError):
    code = "DegenerateParameter"


class ResolventSingular(BicomplexError, ZeroDivisionError):
    code = "ResolventSingular"

    def __init__(self, component: int, message: str | None = None):
        self.component = component
        super().__init__(message or f"I - ZA is singular in component {component}")


class NotSchur(BicomplexError, ValueError):
    code = "NotSchur"

    def __init__(self, component: int, step: int, rho: complex):
        self.component = component
        self.step = step
        self.rho = rho
        super().__init__(
            f"component {component}: |rho_{step}| = {abs(rho):.6g} exceeds 1"
        )


class NonVanishing(BicomplexError, ValueError):
    code = "NonVanishing"
