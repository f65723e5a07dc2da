from __future__ import annotations

from typing import Any


class PcubeError(Exception):
    """
    Base class of every error raised by pcube.

    Catch this class to handle any failure of the library (invalid partial cubes, failed
    preconditions, exhausted search budgets) separately from ordinary Python errors.
    """

    ...


class NotPartialCube(PcubeError):
    """
    The input is not a partial cube.

    Raised by `from_labels` when a label set does not induce an isometric subgraph of the
    hypercube, and by `recognize` when an abstract graph admits no isometric hypercube
    embedding. The subclasses carry the witness of the failure.
    """

    ...


class NotConnected(NotPartialCube):
    """
    The labels or the abstract graph induce a disconnected graph.

    Attributes
    ----------
    component : frozenset
        The vertices reachable from the first vertex.
    """

    def __init__(self, message: str = "Graph is not connected", *, component: frozenset[Any] = frozenset()):
        super().__init__(message)
        self.component = component


class NotIsometric(NotPartialCube):
    """
    Some pair of labels is farther apart in the graph than in the hypercube.

    Attributes
    ----------
    pair : tuple[int, int]
        The offending labels.
    graph_distance : int
        Their distance in the induced subgraph.
    hamming_distance : int
        Their Hamming distance.
    """

    def __init__(
        self,
        message: str = "Labels are not isometrically embedded",
        *,
        pair: tuple[int, int] = (0, 0),
        graph_distance: int = 0,
        hamming_distance: int = 0,
    ):
        super().__init__(message)
        self.pair = pair
        self.graph_distance = graph_distance
        self.hamming_distance = hamming_distance


class NotBipartite(NotPartialCube):
    """
    The abstract graph contains an odd cycle.

    Attributes
    ----------
    edge : tuple
        An edge joining two vertices at the same distance parity from the base vertex.
    """

    def __init__(self, message: str = "Graph is not bipartite", *, edge: tuple[Any, Any] | None = None):
        super().__init__(message)
        self.edge = edge


class HalfspaceNotConvex(NotPartialCube):
    """
    Djoković's criterion fails: some set W(u, v) is not convex.

    Attributes
    ----------
    edge : tuple
        The edge uv whose side W(u, v) is not convex.
    path : tuple
        A shortest path with both ends in the side that leaves it.
    """

    def __init__(
        self,
        message: str = "Halfspace is not convex",
        *,
        edge: tuple[Any, Any] | None = None,
        path: tuple[Any, ...] = (),
    ):
        super().__init__(message)
        self.edge = edge
        self.path = path


class InvalidLabel(PcubeError):
    """
    A label is negative or does not fit in the declared number of coordinates.
    """

    ...


class LookupFailure(PcubeError):
    """
    A vertex or coordinate does not belong to the graph.
    """

    ...


class UnknownVertex(LookupFailure):
    def __init__(self, label: int):
        super().__init__(f"Vertex {label:#b} is not in the graph")
        self.label = label


class UnknownCoordinate(LookupFailure):
    def __init__(self, coordinate: int, m: int):
        super().__init__(f"Coordinate {coordinate} is outside 0..{m - 1}")
        self.coordinate = coordinate


class EmptyRegion(PcubeError):
    """
    A restriction selects no vertex.
    """

    ...


class BudgetExceeded(PcubeError):
    """
    An exponential search hit its configured budget.

    Attributes
    ----------
    budget : int
        The budget that was exhausted. Budgets come from `Settings` unless given explicitly.
    """

    def __init__(self, message: str = "Search budget exceeded", *, budget: int = 0):
        super().__init__(message)
        self.budget = budget


class TooManyFreeClasses(BudgetExceeded):
    """
    `gated_hull` would have to examine more candidate supersets than allowed.
    """

    ...


class NotVCOne(PcubeError):
    """
    A family has two incompatible coordinates and therefore VC-dimension at least 2.
    """

    def __init__(self, message: str = "Family has VC-dimension > 1", *, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class CoverError(PcubeError):
    """
    A pair of vertex sets is not an isometric cover.
    """

    ...


class NotIsometricPart(CoverError): ...


class EdgeNotCovered(CoverError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"Edge {edge[0]:#b}-{edge[1]:#b} lies in neither part")
        self.edge = edge


class VertexNotCovered(CoverError): ...


class EmptyIntersection(CoverError): ...


class CellError(PcubeError):
    """
    Failure of a cell-level construction (full subdivisions, disks, wiring diagrams, cycles).
    """

    ...


class NotFullSubdivision(CellError): ...


class NotADisk(CellError): ...


class InvalidDiagram(CellError): ...


class NotAnIsometricCycle(CellError): ...


class CompletionError(PcubeError):
    """
    A completion step could not be applied or its result failed verification.
    """

    ...


class HostNotTwoDimensional(CompletionError):
    """
    The host graph has VC-dimension at least 3, i.e. it has a Q_3 pc-minor.
    """

    def __init__(self, message: str = "Graph is not two-dimensional", *, shattered: int | None = None):
        super().__init__(message)
        self.shattered = shattered


class NotMaximal(CompletionError): ...


class NotConvex(CompletionError): ...


class NotGated(CompletionError): ...


class ClassNotCrossing(CompletionError): ...


class CycleTooShort(CompletionError): ...


class VerificationFailed(CompletionError):
    """
    A step produced a graph violating one of the guarantees it is supposed to preserve.

    Attributes
    ----------
    check : str
        Name of the failed guarantee.
    """

    def __init__(self, check: str):
        super().__init__(f"Verification failed: {check}")
        self.check = check


class AmalgamError(PcubeError): ...


class BadParams(PcubeError):
    """
    Generator parameters out of range.
    """

    ...


class DocumentError(PcubeError):
    """
    An input file could not be parsed.
    """

    ...
