"""Exception types raised across the toolkit."""


class RevError(ValueError):
    """Base class for every domain error in revadder."""


class LengthMismatch(RevError):
    pass


class ValueOutOfRange(RevError):
    pass


class NotBijective(RevError):
    """A gate mapping sends two input words to the same output word."""

    def __init__(self, first: int, second: int, output: int, width: int):
        self.first = first
        self.second = second
        self.output = output
        self.width = width
        super().__init__(
            f"inputs {first:0{width}b} and {second:0{width}b} both map to {output:0{width}b}"
        )


class UnknownGate(RevError):
    pass


class WidthMismatch(RevError):
    pass


class WidthOutOfRange(RevError):
    pass


class LineOutOfRange(RevError):
    pass


class DuplicateLine(RevError):
    pass


class ArityMismatch(RevError):
    pass


class ConflictsWithInputLabel(RevError):
    pass


class DuplicateLabel(RevError):
    pass


class GarbageOutputConflict(RevError):
    pass


class MissingInput(RevError):
    pass


class UnexpectedInput(RevError):
    pass


class MissingOutput(RevError):
    pass


class TooManyFreeInputs(RevError):
    pass


class InputShapeMismatch(RevError):
    pass


class EmptyInput(RevError):
    pass


class ParseError(RevError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
