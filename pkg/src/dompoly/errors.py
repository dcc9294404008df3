class DompolyError(Exception):
    """Base class for all toolkit errors."""


class GraphInputError(DompolyError, ValueError):
    """Malformed graph data: bad endpoints, loops, non-edges."""


class CapacityError(DompolyError):
    """A size limit (vertices, edges, lemma ground set) was exceeded."""


class ParseError(GraphInputError):
    """A text format could not be decoded.

    ``position`` is a byte offset for graph6 and a 1-based line number for
    edge lists.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
