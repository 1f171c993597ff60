"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all stonelat errors."""


class ParseError(Error):
    """Malformed input text (semilattice file or partition literal)."""


class UnknownElement(Error, KeyError):
    """An identifier that is not part of the carrier."""

    def __str__(self):
        return Exception.__str__(self)


class CycleError(Error):
    """The generating order pairs violate antisymmetry."""


class NoZeroError(Error):
    """The designated zero is not below every element."""


class NoMeetError(Error):
    """Two elements without a greatest common lower bound."""

    def __init__(self, x, y):
        super().__init__(f"no meet for {x!r} and {y!r}: two maximal common lower bounds")
        self.x = x
        self.y = y


class SizeLimit(Error):
    """Requested size above the supported enumeration cap."""


class ZeroGenerated(Error):
    """A candidate filter seed meets down to the least element."""


class NoFip(Error):
    """Ultrafilter extension requested for a family whose meet is zero."""


class EmptyLattice(Error):
    """Operation requires at least one ultrafilter, i.e. a nonzero element."""


class NotComplemented(Error):
    """A claimed complement map fails verification."""


class NotACover(Error):
    """A family passed as a cover does not consist of opens covering the points."""


class FiniteBlockError(Error):
    """A prefix color missing from the period would create a finite block."""


class TrivialInput(Error):
    """Operation requires non-trivial (multi-block) partitions."""


class ZeroRunError(Error):
    """Run lengths must be positive integers."""


class IndexOutOfRange(Error, IndexError):
    """Block index beyond the number of blocks."""
