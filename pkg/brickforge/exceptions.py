from typing import Any, Optional


class BrickforgeError(Exception):
    """Base exception for all brickforge errors."""
    pass


class GraphError(BrickforgeError):
    """Raised when an edit would break the simple-graph invariants."""
    pass


class LoopEdge(GraphError):
    """Raised when an edge would join a vertex to itself."""
    pass


class DuplicateEdge(GraphError):
    """Raised when an edge is added twice."""
    pass


class MissingEdge(GraphError):
    pass


class MissingVertex(GraphError):
    pass


class BadParameter(GraphError):
    """Raised for named-graph parameters outside their range."""
    pass


class GraphParseError(BrickforgeError):
    """Raised when graph, spec or sequence text cannot be parsed."""
    def __init__(self, message: str, line: Optional[int] = None, position: Optional[int] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if position is not None:
            location.append(f"position {position}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.position = position


class SameVertex(BrickforgeError):
    """Raised when a vertex pair that must be distinct is not."""
    pass


class TooLarge(BrickforgeError):
    """Raised when an exhaustive routine is asked for too many vertices."""
    pass


class NotMinimalBrick(BrickforgeError):
    pass


class ExtensionError(BrickforgeError):
    """Base class for failures while validating or applying an extension."""
    pass


class DegreeTooLow(ExtensionError):
    """Raised when a bisplit targets a vertex of degree below 4."""
    pass


class BadPartition(ExtensionError):
    """Raised when a neighbourhood partition is not a valid 2/2 split."""
    pass


class SpecInvariantViolated(ExtensionError):
    """Raised when an extension spec breaks one of its defining constraints."""
    def __init__(self, clause: str, detail: str = ""):
        message = f"constraint {clause} violated"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.clause = clause


class NeighborChoiceInfeasible(ExtensionError):
    """Raised when the requested fundament neighbours cannot be picked."""
    pass


class SequenceError(BrickforgeError):
    pass


class NotABrick(SequenceError):
    """Raised when a step of a brick-on-brick sequence leaves the brick class."""
    def __init__(self, step: int, witness: Any = None):
        super().__init__(f"step {step} does not produce a brick (witness: {witness})")
        self.step = step
        self.witness = witness


class PreconditionUnmet(SequenceError):
    pass


class FundamentConflict(SequenceError):
    """Raised when reorder finds a new vertex inside the later fundament."""
    pass


class FundamentMismatch(SequenceError):
    pass


class LemmaViolation(SequenceError):
    """Raised when a computed instance contradicts a published statement."""
    pass


class CapExceeded(BrickforgeError):
    """Raised when an enumeration bound exceeds the configured cap."""
    pass
