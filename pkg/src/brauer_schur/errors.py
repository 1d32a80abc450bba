"""Exception hierarchy shared by the engine modules.

Errors fall in three families that the command line maps to exit codes:
malformed input (`SpecError`), exhausted search budgets (`SearchExhausted`
and subclasses), and internal failures (`InternalError`).
"""


class BrauerSchurError(Exception):
    """Base class for every error raised by this package."""


class SpecError(BrauerSchurError, ValueError):
    """A parameter, coloring spec or schedule violates its preconditions."""


class InternalError(BrauerSchurError):
    """The engine produced something its own verifier rejects."""


class CoordinateOverflow(InternalError):
    """A coefficient of the square-trick claim left its coordinate range."""


class SearchExhausted(BrauerSchurError):
    """A search ran out of room before reaching a certificate.

    ``trace`` carries whatever partial state is useful for a report.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace if trace is not None else {}


class SupportExhausted(SearchExhausted, LookupError):
    """A finite (file backed) coloring was queried beyond its data."""

    def __init__(self, n):
        super().__init__(f"coloring has no value for {n}", {"n": n})
        self.n = n


class BudgetExceeded(SearchExhausted):
    """An exhaustive search exceeded its node or enumeration budget.

    ``partial`` holds results completed before the budget ran out, if any.
    """

    def __init__(self, message, trace=None, partial=()):
        super().__init__(message, trace)
        self.partial = list(partial)


class PlanExhausted(SearchExhausted):
    """A window plan cannot supply (or grow) the window for a level."""


class WindowExhausted(SearchExhausted):
    """No monochromatic progression exists in the window at some level."""

    def __init__(self, level, partial=(), trace=None):
        super().__init__(f"no monochromatic progression at level {level}", trace)
        self.level = level
        self.partial = list(partial)


class StabilizationFailed(SearchExhausted):
    """No stabilized subsequence of the requested depth within the horizon."""

    def __init__(self, depth, horizon, trace=None):
        super().__init__(
            f"no stabilized subsequence of depth {depth} within horizon {horizon}", trace
        )
        self.depth = depth
        self.horizon = horizon


class IndexExhausted(SearchExhausted):
    """The difference sequence ran out before the construction finished."""

    def __init__(self, needed, available, trace=None):
        super().__init__(
            f"difference sequence needed up to index {needed}, only {available} available",
            trace,
        )
        self.needed = needed
        self.available = available


class Inconclusive(SearchExhausted):
    """The dichotomy could not settle on either case within its budgets."""
