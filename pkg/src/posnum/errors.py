"""Exception hierarchy shared by every module."""


class PosnumError(Exception):
    """Base class for all domain errors raised by posnum."""


class ParseError(PosnumError, ValueError):
    """Malformed input text.

    ``offset`` is the byte offset into the input where parsing stopped and
    ``expected`` describes the token that would have been accepted there.
    """

    def __init__(self, message, text="", offset=0, expected=""):
        self.text = text
        self.offset = offset
        self.expected = expected
        detail = message
        if expected:
            detail = f"{message} at offset {offset}: expected {expected}"
        super().__init__(detail)


class SystemSpecError(ParseError):
    """A system-spec string is syntactically or semantically invalid."""


class LengthError(PosnumError, ValueError):
    """A numeral (or requested length) exceeds the system's position bound."""


class UnrepresentableError(PosnumError, ValueError):
    """An integer has no representation in the requested system."""


class UnsupportedSystemError(PosnumError, ValueError):
    """The operation is not defined for this shape of number system."""


class DigitRangeError(PosnumError, ValueError):
    """A digit lies outside the range an operation requires."""


class ScaleGuardError(PosnumError, RuntimeError):
    """An audit would exceed its candidate budget."""


class CalendarError(PosnumError, ValueError):
    """Invalid calendar coordinates or an impossible calendar conversion."""
