import typing


class TreeDissociationError(Exception):
    """Base class of every error raised by the package."""


class TreeInputError(TreeDissociationError, ValueError):
    """A tree description (edge list, label, edge set) is not a valid tree.

    Attributes:
        line (int, optional): 1-based line of the edge-list input that triggered the error.
    """

    def __init__(self, message: str, line: typing.Optional[int] = None) -> None:
        """Initializes the error.

        Args:
            message (str): Human readable description.
            line (int, optional): Offending input line. Defaults to None.
        """
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleDetected(TreeInputError):
    """An edge closes a cycle."""


class Disconnected(TreeInputError):
    """The edges do not connect every vertex."""


class DuplicateEdge(TreeInputError):
    """The same edge appears twice (in either orientation)."""


class SelfLoop(TreeInputError):
    """An edge joins a vertex to itself."""


class LabelOutOfRange(TreeInputError):
    """A vertex label is negative or not smaller than the vertex count."""


class MalformedLine(TreeInputError):
    """A line is neither a header, a comment nor a pair of integer labels."""


class ModeResidueMismatch(TreeDissociationError, ValueError):
    """A path witness was requested in a mode that does not fit the path order modulo 3."""


class PruningError(TreeDissociationError):
    """Base class of errors raised by the pruning process."""


class NotABranchVertex(PruningError, ValueError):
    """The vertex is deleted or has fewer than two surviving children."""


class IsRoot(PruningError, ValueError):
    """The root can never be pruned."""


class DescendantDegreeViolation(PruningError, ValueError):
    """Some proper descendant of the vertex still has degree 3 or more."""


class NotASpider(PruningError, ValueError):
    """Some non-root vertex has more than one child."""


class ChildNotPath(PruningError, RuntimeError):
    """Child classes were requested for a vertex whose child subtrees are not all paths."""


class OracleLimitError(TreeDissociationError, ValueError):
    """An exhaustive computation was requested outside its supported size."""


class TooLarge(OracleLimitError):
    """The tree has too many vertices for exhaustive enumeration."""


class OutOfSupportedRange(OracleLimitError):
    """The requested order is outside the enumerable range."""
