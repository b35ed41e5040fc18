"""Exception and warning types shared across the package."""


class SlepnetError(Exception):
    """Base class for all errors raised by this package."""


class GraphConstructionError(SlepnetError, ValueError):
    """Invalid edge data supplied at graph assembly time."""


class IndexOutOfRangeError(GraphConstructionError):
    """Edge endpoint outside [0, num_nodes)."""


class NonPositiveWeightError(GraphConstructionError):
    """Edge weight is zero, negative, or not finite."""


class SelfLoopError(GraphConstructionError):
    """Edge connecting a node to itself."""


class DuplicateEdgeError(GraphConstructionError):
    """The same undirected node pair appears more than once."""


class ZeroDegreeNodeError(SlepnetError, ValueError):
    """A node with no incident weight, where positive degrees are required."""


class DisconnectedGraphError(SlepnetError):
    """Operation requires a connected graph."""


class ConvergenceFailureError(SlepnetError):
    """Iterative eigensolver exhausted its iteration budget."""


class DimensionMismatchError(SlepnetError, ValueError):
    """Operands with incompatible sizes."""


class NegativeEigenvalueError(SlepnetError, ValueError):
    """Eigenvalue input is negative beyond numerical tolerance."""


class InsufficientBandwidthError(SlepnetError, ValueError):
    """Basis does not hold enough eigenvectors for the request."""


class DimensionTooLargeError(SlepnetError, ValueError):
    """Requested output dimension exceeds the available basis size."""


class SelectionError(SlepnetError, ValueError):
    """Invalid node selection."""


class EmptySelectionError(SelectionError):
    """Selection resolves to no nodes."""


class UnknownIdError(SelectionError):
    """Node id not present in the graph or metadata."""


class UnknownTagError(SelectionError):
    """Category tag not present in the metadata."""


class ParseError(SlepnetError, ValueError):
    """Malformed input text.

    Carries the 1-based line number when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateIdError(ParseError):
    """The same id appears on more than one metadata row."""


class NotTwoDimensionalError(SlepnetError, ValueError):
    """Scatter rendering requires exactly two coordinate columns."""


class TruncationDegeneracyWarning(UserWarning):
    """The truncation boundary falls inside a degenerate eigenvalue cluster."""


class DuplicateEdgeAggregationWarning(UserWarning):
    """Duplicate undirected pairs in an edge list were summed at parse time."""
