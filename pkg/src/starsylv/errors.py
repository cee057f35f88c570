"""Exception hierarchy shared by every module of the package."""


class StarSylvError(Exception):
    """Base class for all errors raised by starsylv."""


class DivisionByZero(StarSylvError, ZeroDivisionError):
    pass


class FieldMismatch(StarSylvError, TypeError):
    pass


class InvalidStarMode(StarSylvError, ValueError):
    pass


class Char2Rejected(StarSylvError, ValueError):
    """A characteristic 2 field was requested without the probe flag."""


class Char2Unsupported(StarSylvError, ValueError):
    """An operation that needs 1/2 was called over characteristic 2."""


class NotSquare(StarSylvError, ValueError):
    pass


class NonConformalBlocks(StarSylvError, ValueError):
    pass


class ShapeMismatch(StarSylvError, ValueError):
    pass


class IndexOutOfRange(StarSylvError, IndexError):
    pass


class NotASolution(StarSylvError, ValueError):
    pass


class InvalidWitness(StarSylvError, ValueError):
    pass


class SearchSpaceTooLarge(StarSylvError, ValueError):
    pass


class ProbeDisabled(StarSylvError, RuntimeError):
    pass


class ParseError(StarSylvError, ValueError):
    """Malformed text input; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
