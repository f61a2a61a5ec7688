"""Exception hierarchy shared by every layer of the package."""


class DynSeqError(Exception):
    """Base class for all errors raised by dynseq."""


class DescriptorMismatch(DynSeqError):
    pass


class ReducibleMinimalPolynomial(DynSeqError, ZeroDivisionError):
    pass


class VarTableMismatch(DynSeqError):
    pass


class DimensionMismatch(DynSeqError):
    pass


class OrderMismatch(DynSeqError):
    pass


class SizeLimitExceeded(DynSeqError):
    pass


class ZeroDenominatorSymbolic(DynSeqError, ZeroDivisionError):
    pass


class NonIntegerValuedPolynomial(DynSeqError, ValueError):
    pass


class ZeroBaseNegativeExponent(DynSeqError, ValueError):
    pass


class Indeterminacy(DynSeqError):
    """A denominator vanished while evaluating along an orbit.

    ``index`` is the orbit step (or ``None`` when unknown) and ``component``
    the offending map component, when known.
    """

    def __init__(self, index=None, component=None, message=None):
        self.index = index
        self.component = component
        if message is None:
            parts = []
            if index is not None:
                parts.append(f"step {index}")
            if component is not None:
                parts.append(f"component {component}")
            where = " at " + ", ".join(parts) if parts else ""
            message = f"indeterminacy{where}"
        super().__init__(message)

    def at_step(self, index):
        return Indeterminacy(index=index, component=self.component)


class ParseError(DynSeqError, ValueError):
    def __init__(self, message, position=None, expected=None, text=None):
        self.position = position
        self.expected = expected
        self.text = text
        detail = message
        if position is not None:
            detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
