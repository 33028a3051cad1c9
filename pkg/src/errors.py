"""
Exception hierarchy shared by the algebraic and numeric modules.

Verification operations return reports instead of raising; the exceptions
below are for inputs that cannot be processed at all.
"""
from typing import Any, Optional, Tuple


class CentralExtensionError(Exception):
    """Base class for every error raised by this package"""


class InvalidInputError(CentralExtensionError, ValueError):
    """Malformed, mismatched or out-of-range input"""


class RefusedConstruction(CentralExtensionError):
    """A construction whose preconditions fail, with the violating data attached"""

    def __init__(self, message: str, axiom: str = "", witness: Optional[Tuple[Any, ...]] = None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class SizeGuardError(CentralExtensionError):
    """An enumeration or matrix would exceed the configured limits"""


class ChartDomainError(CentralExtensionError):
    """A simplex left the chart domain"""

    def __init__(self, message: str, parameters: Tuple[float, ...] = ()):
        super().__init__(message)
        self.parameters = tuple(float(p) for p in parameters)


class ResolutionError(CentralExtensionError):
    """Path sampling too coarse to determine a winding number"""


class NumericalError(CentralExtensionError):
    """NaN or infinity produced during quadrature or differentiation"""


class NotComposableError(CentralExtensionError, KeyError):
    """Composition requested for a pair whose target and source do not match"""
