"""Exception types shared across the engine."""


class TautjacError(Exception):
    """Base class for all errors raised by this package."""


class WindowExceeded(TautjacError):
    """An operator was applied or compared beyond its validity window."""

    def __init__(self, needed, window):
        super().__init__(
            "operation needs window >= %s, operator is only valid up to %s"
            % (needed, window)
        )
        self.needed = needed
        self.window = window


class CapExceeded(TautjacError):
    """A polynomial reaches weights above the source cap of a relation ideal."""

    def __init__(self, weight, cap):
        super().__init__(
            "monomial of weight %s exceeds the source cap %s" % (weight, cap)
        )
        self.weight = weight
        self.cap = cap


class InvalidGenus(TautjacError):
    """Genus parameter below 2."""


class CapTooSmall(TautjacError):
    """Source cap must exceed the genus for the closure to see any relation."""


class NotNilpotent(TautjacError):
    """Operator exponential cannot be guaranteed to terminate."""


class VerificationFailure(TautjacError):
    """An exact identity check failed; carries the first counterexample."""

    def __init__(self, entry, difference=None):
        super().__init__("identity failed: %s" % (entry,))
        self.entry = entry
        self.difference = difference


class ParseError(TautjacError):
    """Syntax error in a polynomial expression, tagged with a position."""

    def __init__(self, message, position, expected=()):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position
        self.expected = tuple(expected)


class IndexZeroError(ParseError):
    """The tokens p0 / q0 are rejected: indices start at 1."""
