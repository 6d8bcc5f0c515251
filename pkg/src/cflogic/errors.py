"""Exception hierarchy shared by every cflogic module."""


class CFLError(Exception):
    """Base class for all cflogic errors."""


class ParseError(CFLError):
    """Raised when formula text does not conform to the grammar.

    ``position`` is the 1-based character offset of the offending token and
    ``expected`` the set of token kinds that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


class MissingVariableError(CFLError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"no value bound for variable {self.name!r}"


class TooManyVariablesError(CFLError):
    pass


class WeightRangeError(CFLError, ValueError):
    pass


class DuplicateElementError(CFLError, ValueError):
    pass


class UnknownElementError(CFLError, KeyError):
    def __str__(self):
        return str(self.args[0])


class UnknownSetError(CFLError, KeyError):
    def __str__(self):
        return str(self.args[0])


class UniverseMismatchError(CFLError):
    pass


class NotCrispError(CFLError, ValueError):
    def __init__(self, element, weight):
        self.element = element
        self.weight = weight
        super().__init__(f"element {element!r} has non-crisp weight {weight}")


class SegmentError(CFLError, ValueError):
    """Segments that do not tile the domain exactly."""

    def __init__(self, message, breakpoint=None):
        self.breakpoint = breakpoint
        super().__init__(message)


class RangeViolationError(CFLError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"membership values leave [0, 1]: {lines}")


class DomainMismatchError(CFLError):
    pass


class OutOfDomainError(CFLError, ValueError):
    pass
