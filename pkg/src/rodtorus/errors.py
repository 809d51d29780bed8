"""Exception types raised across the package."""


class RodError(Exception):
    """Base class for all errors raised by rodtorus."""


class AllZeroVector(RodError, ValueError):
    pass


class NotPrimitive(RodError, ValueError):
    pass


class DegenerateSpan(RodError, ValueError):
    pass


class ExactnessError(RodError, TypeError):
    """A non-exact number (float, decimal string) was supplied."""


class IntersectingRods(RodError):
    """Raised by packing validation; carries every offending index pair."""

    def __init__(self, pairs):
        self.pairs = [tuple(p) for p in pairs]
        shown = ", ".join(f"IntersectingRods({i},{j})" for i, j in self.pairs)
        super().__init__(shown)


class EmptyPacking(RodError, ValueError):
    pass


class NotParallelPair(RodError, ValueError):
    pass


class SameRod(RodError, ValueError):
    pass


class EndpointOnObstacle(RodError, ValueError):
    pass


class RankThree(RodError, ValueError):
    """No plane contains every rod direction."""


class ResourceLimitExceeded(RodError):
    pass
