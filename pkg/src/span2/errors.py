class Span2Error(Exception):
    """Base class for every error raised by span2."""


class CompositionMismatch(Span2Error):
    """Two arrows (or a cospan/span pair) do not share the required object."""


class InvalidMorphism(Span2Error):
    """A table is not a total function between the stated objects."""


class InvalidObject(Span2Error):
    pass


class NotACone(Span2Error):
    """Cone legs fail an edge equation, so no mediating arrow exists."""


class MalformedDiagram(Span2Error):
    pass


class NotInvertible(Span2Error):
    pass


class NotComposable(Span2Error):
    """Spans or 2-cells whose feet (or middle spans) do not match."""


class NotCommuting(Span2Error):
    """A span of spans whose squares do not commute."""


class PullbackUnavailable(Span2Error):
    """Raised by a backend that only has some pullbacks."""


class ApexTooLarge(Span2Error):
    """Product-then-filter limit would enumerate more tuples than allowed."""
