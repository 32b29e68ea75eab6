"""Exception hierarchy shared across the package."""


class InvTreeError(Exception):
    """Base class for all package errors."""


class ParseError(InvTreeError):
    """Malformed edge-list input."""


class NotATree(InvTreeError):
    """Edge set is not a tree (wrong edge count, disconnected, loops, ...)."""


class NotPerfect(InvTreeError):
    """Matching does not cover every vertex."""


class SameVertex(InvTreeError):
    """Path endpoints coincide."""


class NotInvertible(InvTreeError):
    """Tree has no perfect matching, so its adjacency matrix is singular."""


class Singular(InvTreeError):
    """Integer matrix has determinant 0."""


class OddOrder(InvTreeError):
    """Operation requires an even number of vertices."""


class BoundExceeded(InvTreeError):
    """Requested size is above the configured enumeration bound."""


class EdgeAlreadyPresent(InvTreeError):
    """Fundamental cycle requested for an edge already in the tree."""


class NotSpanningTreeEdge(InvTreeError):
    """Fundamental cut requested for an edge outside the spanning tree."""


class InvalidMove(InvTreeError):
    """Tree-exchange move violates one of its invariants."""
