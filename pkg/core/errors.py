"""
linkage-lab - Exception hierarchy
Every engine failure derives from LinkageLabError so callers can catch one type.
"""


class LinkageLabError(Exception):
    """Base class for all engine errors."""


class StructuralError(LinkageLabError):
    """Operands do not live in the same ring, or shapes do not match."""


class DomainError(LinkageLabError):
    """An operation precondition does not hold."""


class EmptyRingError(DomainError):
    def __init__(self, message="empty ring"):
        super().__init__(message)


class NotArtinianError(DomainError):
    def __init__(self, message="filter ideal not primary to the variable ideal"):
        super().__init__(message)


class RegularSequenceError(DomainError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"not a regular sequence: element {index} is a zero divisor")


class InapplicableError(LinkageLabError):
    """A theorem hypothesis gate failed; the computation has no meaning here."""


class BudgetExceededError(LinkageLabError):
    def __init__(self, message, table=None):
        self.table = table
        super().__init__(message)


class StabilizationError(LinkageLabError):
    def __init__(self, message, candidates=None):
        self.candidates = candidates or []
        super().__init__(message)


class SessionError(LinkageLabError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class UndeclaredNameError(SessionError):
    def __init__(self, name, line=None, column=None):
        self.name = name
        super().__init__(f"undeclared: {name}", line, column)
