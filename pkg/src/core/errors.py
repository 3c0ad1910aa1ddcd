# src/core/errors.py

"""
Exception hierarchy shared by every solver and builder.

All public errors derive from LabError so the CLI can map them to an
"input invalid" exit status in one place.
"""


class LabError(Exception):
    """Base class for all errors raised by the laboratory."""


# =============================================================================
# Graph errors
# =============================================================================


class GraphError(LabError, ValueError):
    """Invalid graph structure (loop, parallel edge, out-of-range vertex)."""


class EmptyGraphError(GraphError):
    """Operation needs at least one vertex."""

    def __init__(self, message: str = "empty graph"):
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    """Operation needs a connected graph."""

    def __init__(self, message: str = "not connected"):
        super().__init__(message)


class Graph6ParseError(GraphError):
    """Base class for graph6 decoding failures."""


class MalformedHeaderError(Graph6ParseError):
    """The vertex-count header is missing or invalid."""


class TruncatedPayloadError(Graph6ParseError):
    """The adjacency payload is shorter than the header requires."""


class InvalidByteError(Graph6ParseError):
    """A payload byte lies outside the printable range 63..126."""


class TrailingDataError(Graph6ParseError):
    """The adjacency payload is longer than the header allows."""


class Graph6EmitError(GraphError):
    """The graph cannot be represented in graph6."""


# =============================================================================
# Parameter & validation errors
# =============================================================================


class ParameterError(LabError, ValueError):
    """A builder or solver parameter violates its documented bound."""


class TreeValidationError(LabError, ValueError):
    """A proposed spanning tree is not a spanning tree of the host graph."""


class LabelMismatchError(LabError, ValueError):
    """Role labels do not describe the graph they were paired with."""


class NoStarFactorError(LabError, ValueError):
    """The graph has an isolated vertex, so no star factor exists."""

    def __init__(self, message: str = "no star factor exists"):
        super().__init__(message)


class RetryBudgetExceeded(LabError, RuntimeError):
    """A randomized builder ran out of attempts."""


# =============================================================================
# Control flow
# =============================================================================


class BudgetExhausted(LabError):
    """
    Raised by the budget tracker when a search runs out of nodes or time.

    Solvers catch it and report an indeterminate verdict; it never escapes
    a public solver call.
    """

    def __init__(self, reason: str):
        super().__init__(f"search budget exhausted: {reason}")
        self.reason = reason
