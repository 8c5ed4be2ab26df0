"""Exception hierarchy.

Everything derives from :class:`DistbalError`; input problems also
derive from ``ValueError`` so callers can catch them generically.
"""


class DistbalError(Exception):
    pass


class GraphError(DistbalError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError, IndexError):
    pass


class EdgeOutOfRange(GraphError, IndexError):
    pass


class Disconnected(GraphError):
    pass


class SameVertex(GraphError):
    pass


class UnreachablePair(GraphError):
    pass


class EmptyFactor(GraphError):
    pass


class TrivialFactor(GraphError):
    pass


class ParameterOutOfRange(DistbalError, ValueError):
    pass


class BoundExceeded(DistbalError, ValueError):
    pass


class FormatError(DistbalError, ValueError):
    """Malformed serialized input; ``offset`` is a byte offset or line number."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (at {offset})")
        self.offset = offset


class BadHeader(FormatError):
    pass


class BadLength(FormatError):
    pass


class NonzeroPadding(FormatError):
    pass


class SyntaxFormatError(FormatError):
    pass


class CountMismatch(FormatError):
    pass
