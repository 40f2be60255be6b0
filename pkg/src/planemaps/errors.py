"""Exception hierarchy.

Every error carries a stable ``code`` string so the command line can report
failures in machine-readable form.
"""

from __future__ import annotations


class ToolkitError(Exception):
    code = "ToolkitError"

    def to_json(self) -> dict:
        return {"code": self.code, "message": str(self)}


class IncompatibleField(ToolkitError):
    code = "IncompatibleField"


class UnsupportedTower(ToolkitError):
    code = "UnsupportedTower"


class NonInvertibleElement(ToolkitError, ZeroDivisionError):
    code = "NonInvertibleElement"


class ZeroPolynomial(ToolkitError):
    code = "ZeroPolynomial"


class DegenerateInput(ToolkitError):
    code = "DegenerateInput"


class UnsupportedLeadingCoefficient(ToolkitError):
    code = "UnsupportedLeadingCoefficient"


class NotAPrimePower(ToolkitError):
    code = "NotAPrimePower"


class DegreeBoundExceeded(ToolkitError):
    code = "DegreeBoundExceeded"


class DegenerateMap(ToolkitError):
    code = "DegenerateMap"


class NotMonic(ToolkitError):
    code = "NotMonic"


class InternalError(ToolkitError):
    code = "InternalError"


class DegenerateResultant(ToolkitError):
    code = "DegenerateResultant"


class DegenerateFiber(ToolkitError):
    """The fiber polynomial p - c has a repeated factor."""

    code = "DegenerateFiber"


class InsufficientOrder(ToolkitError):
    code = "InsufficientOrder"

    def __init__(self, needed: int, message: str | None = None):
        self.needed = needed
        super().__init__(message or f"truncation order too small; need order >= {needed}")

    def to_json(self) -> dict:
        out = super().to_json()
        out["needed"] = self.needed
        return out


class NotUnivariate(ToolkitError):
    code = "NotUnivariate"


class ParseError(ToolkitError):
    code = "ParseError"

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")

    def to_json(self) -> dict:
        out = super().to_json()
        out["position"] = self.position
        return out


class UnknownVariable(ParseError):
    code = "UnknownVariable"


class NegativeExponent(ParseError):
    code = "NegativeExponent"
