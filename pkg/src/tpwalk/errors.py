"""Exception types shared across the package.

Everything raised by the library derives from PolytopeError so callers can
catch domain failures in one clause.  Misuse of the API (bad indices, wrong
argument shapes) raises plain ValueError/TypeError instead.
"""

from __future__ import annotations


class PolytopeError(Exception):
    """Base class for all domain errors raised by this package."""


# --- instance construction / validation

class Unbalanced(PolytopeError):
    """Total supply differs from total demand."""


class NonPositiveMargin(PolytopeError):
    """A supply or demand margin (or a reduced network margin) is <= 0."""


class DisconnectedAllowedGraph(PolytopeError):
    """The bipartite graph of allowed edges does not connect all nodes."""


# --- tree flows and pivots

class NotASpanningTree(PolytopeError):
    """An edge set does not form a spanning tree of the node set."""


class ForbiddenEdge(PolytopeError):
    """An operation touched an edge excluded by the instance's face."""


class EdgeAlreadyPresent(PolytopeError):
    """Pivot entering edge is already part of the tree."""


class DegeneratePivot(PolytopeError):
    """The leaving edge of a pivot is not unique (degenerate instance)."""


# --- walk

class DemandIndexOutOfRange(PolytopeError):
    """A demand node index is outside 1..N2."""


class NonVertexInput(PolytopeError):
    """A tree handed to the walk is not a strictly positive vertex."""


class ShadedEdgeDeleted(PolytopeError):
    """A pivot tried to delete a shaded edge.

    The walk's edge-selection rule makes this impossible, so seeing it
    means the implementation (not the input) is broken.
    """


class NoMinusEdge(PolytopeError):
    """The supply-node update found no unshaded edge and no shaded minus
    edge at the handed demand node; the walk state is corrupted."""


class InvariantViolation(PolytopeError):
    """A runtime diagnostic (unique-open-node or insertion-safety check)
    failed mid-walk; indicates an implementation bug."""


# --- oracle

class BudgetExceeded(PolytopeError):
    """The allowed graph has more spanning trees than the configured budget."""


class DegenerateInstance(PolytopeError):
    """Vertex enumeration met a tree edge with zero flow."""


class VertexNotFound(PolytopeError):
    """A tree is not a vertex of the enumerated skeleton."""


class InfeasibleFace(PolytopeError):
    """The face selected by the forbidden edges contains no feasible flow."""


class BoundViolation(PolytopeError):
    """An exact diameter exceeded the f - d bound.

    Never expected to fire; treated as a fatal defect rather than a result.
    """


# --- network reduction

class UnboundedNetwork(PolytopeError):
    """The network has a directed cycle of infinite-capacity arcs."""


class InfeasibleFlow(PolytopeError):
    """A flow vector violates conservation, capacity, or nonnegativity."""


# --- file I/O and generation

class ParseError(PolytopeError):
    """An instance/network/trace document is malformed."""


class GenerationFailed(PolytopeError):
    """Random instance generation exhausted its retry budget."""


class PerturbationFailed(PolytopeError):
    """Margin perturbation failed to produce a non-degenerate instance."""
