"""Exception hierarchy.

Every error raised on purpose by this package derives from
:class:`HullforgeError`; the CLI maps those to exit status 1 (2 for
:class:`CodeFileError`).
"""

from __future__ import annotations


class HullforgeError(ValueError):
    """Base class for all package errors."""


class DivisionByZero(HullforgeError, ZeroDivisionError):
    pass


class FieldMismatch(HullforgeError):
    pass


class NoHermitianStructure(HullforgeError):
    pass


class ShapeMismatch(HullforgeError):
    pass


class EmptyLength(HullforgeError):
    pass


class TooLargeToEnumerate(HullforgeError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"refusing to enumerate {count} codewords (limit {limit})")
        self.count = count
        self.limit = limit


class OddLength(HullforgeError):
    pass


class NotFullWeight(HullforgeError):
    pass


class NotCoprime(HullforgeError):
    pass


class NonDivisor(HullforgeError):
    pass


class OddCharacteristicRequired(HullforgeError):
    pass


class EvenCharacteristicRequired(HullforgeError):
    pass


class NotRootOfUnity(HullforgeError):
    pass


class PreconditionFailed(HullforgeError):
    pass


class NoValidLambda(HullforgeError):
    pass


class TheoremCaseViolation(HullforgeError):
    pass


class DuplicatePoints(HullforgeError):
    pass


class NonzeroPointsRequired(HullforgeError):
    pass


class NotASubgroup(HullforgeError):
    pass


class NotASubcode(HullforgeError):
    pass


class SearchSpaceTooLarge(HullforgeError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"search space has {count} candidates (limit {limit})")
        self.count = count
        self.limit = limit


class CodeFileError(HullforgeError):
    """Malformed code file; ``line`` is 1-based, ``column`` 1-based or None."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
