"""Exception hierarchy for the chipfiring package.

Errors fall into three groups, mirrored by the CLI exit codes: malformed
or precondition-violating input (exit 2), enumeration/search caps (exit 3),
and internal invariant violations (exit 4).
"""


class ChipFiringError(Exception):
    """Base class for all package errors."""


class GraphError(ChipFiringError):
    """A graph fails validation."""


class LoopArcError(GraphError):
    """An arc starts and ends at the same vertex."""


class ArcFromSinkError(GraphError):
    """An arc leaves the sink."""


class SinkUnreachableError(GraphError):
    """Some vertex has no directed path to the sink."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} cannot reach the sink")


class BadMultiplicityError(GraphError):
    """An arc multiplicity is not a positive integer."""


class NotLaplacianShapedError(GraphError):
    """A matrix cannot be the reduced Laplacian of any valid graph."""


class SingularMatrixError(ChipFiringError):
    """A matrix required to be invertible is singular."""


class NegativeInputError(ChipFiringError):
    """A configuration required to be non-negative has a negative entry."""


class NegativeScriptError(ChipFiringError):
    """A script required to be non-negative has a negative entry."""


class NotStableError(ChipFiringError):
    """A configuration required to be stable has an active vertex."""


class EnumerationCapExceededError(ChipFiringError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"enumeration needs {required} items, cap is {cap}")


class SearchBoundExceededError(ChipFiringError):
    """A bounded brute-force search would exceed its configured bound."""


class InvariantViolationError(ChipFiringError):
    """An internal invariant that should hold for every valid graph failed.

    Raising this means either a bug or a counterexample to a result the
    implementation relies on; the message carries the evidence.
    """


class StrongPositivityPostCheckError(InvariantViolationError):
    """The greedy minimum-script search ended on a script that fails the
    strong-positivity post-check."""
