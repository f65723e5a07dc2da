"""
Isometric covers and isometric expansions, the inverse of Θ-class contraction.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from pcube.conf import settings
from pcube.core.graph import CubeGraph, from_labels
from pcube.core.hulls import is_isometric
from pcube.core.labels import Label, bit, delete_coordinate
from pcube.exceptions import EdgeNotCovered, EmptyIntersection, NotIsometricPart, VertexNotCovered
from pcube.minors.families import SetFamily, vc_dimension
from pcube.minors.operations import contract


@dataclass(frozen=True, slots=True)
class IsometricCover:
    """
    Two isometric subgraphs covering all vertices and edges of a partial cube.

    Attributes
    ----------
    v1, v2 : frozenset[Label]
        The two parts.
    """

    v1: frozenset[Label]
    v2: frozenset[Label]

    @property
    def v0(self) -> frozenset[Label]:
        return self.v1 & self.v2

    @property
    def peripheral(self) -> bool:
        return self.v1 <= self.v2 or self.v2 <= self.v1


@dataclass(frozen=True, slots=True)
class ExpansionResult:
    """
    Attributes
    ----------
    graph : CubeGraph
        The expanded graph, over `m + 1` coordinates.
    new_class : int
        Index of the added Θ-class (always `m`).
    copies : dict[Label, tuple[Label, ...]]
        Old vertex to its copy, or its two copies for vertices of V0.
    """

    graph: CubeGraph
    new_class: int
    copies: dict[Label, tuple[Label, ...]]


def is_peripheral(cover: IsometricCover) -> bool:
    """
    One part contains the other, so the expansion only copies the smaller part.
    """
    return cover.peripheral


def check_cover(graph: CubeGraph, v1: Iterable[Label], v2: Iterable[Label]) -> IsometricCover:
    """
    Validates `(v1, v2)` as an isometric cover of `graph`.

    Raises
    ------
    EdgeNotCovered
        Some edge lies in neither part.
    VertexNotCovered
        Some isolated vertex lies in neither part (only possible for K_1).
    EmptyIntersection
        The parts are disjoint.
    NotIsometricPart
        A part does not induce an isometric subgraph.
    """
    first = graph.require_all(v1)
    second = graph.require_all(v2)
    for u, w in graph.edges():
        if not ({u, w} <= first or {u, w} <= second):
            raise EdgeNotCovered((u, w))
    if first | second != graph.vertex_set:
        raise VertexNotCovered("The parts do not cover every vertex")
    if not first & second:
        raise EmptyIntersection("The parts of a cover must intersect")
    for name, part in (("V1", first), ("V2", second)):
        if not is_isometric(graph, part):
            raise NotIsometricPart(f"{name} is not an isometric subgraph")
    return IsometricCover(first, second)


def expand(graph: CubeGraph, cover: IsometricCover) -> ExpansionResult:
    """
    Duplicates V0 along a new coordinate `m`: V1 takes the 0-side and V2 the 1-side.
    """
    cover = check_cover(graph, cover.v1, cover.v2)
    new = bit(graph.m)
    copies: dict[Label, tuple[Label, ...]] = {}
    for v in graph.vertices:
        images = []
        if v in cover.v1:
            images.append(v)
        if v in cover.v2:
            images.append(v | new)
        copies[v] = tuple(images)
    labels = {image for images in copies.values() for image in images}
    return ExpansionResult(graph=from_labels(graph.m + 1, labels), new_class=graph.m, copies=copies)


def preserves_dimension(graph: CubeGraph, cover: IsometricCover, d: int) -> bool:
    """
    True when the expansion stays in F(Q_{d+1}), i.e. VC(V0) ≤ d − 1.
    """
    return vc_dimension(SetFamily(graph.m, cover.v0)) <= d - 1


@dataclass(frozen=True, slots=True)
class ExpansionStep:
    """
    Attributes
    ----------
    graph : CubeGraph
        The graph before the step.
    cover : IsometricCover
        The cover of `graph` whose expansion gives `result`.
    result : CubeGraph
        The graph after the step.
    """

    graph: CubeGraph
    cover: IsometricCover
    result: CubeGraph


def expansion_sequence(graph: CubeGraph) -> list[ExpansionStep]:
    """
    Expansions from K_1 to `graph`, obtained by contracting the last class repeatedly.

    Step `k` expands the graph on coordinates 0..k−1 by coordinate `k`.
    """
    chain = [graph]
    current = graph
    while current.m:
        current = contract(current, current.m - 1)
        chain.append(current)
    chain.reverse()

    steps = []
    for smaller, larger in zip(chain, chain[1:]):
        k = smaller.m
        v1 = frozenset(delete_coordinate(v, k) for v in larger.vertices if not v >> k & 1)
        v2 = frozenset(delete_coordinate(v, k) for v in larger.vertices if v >> k & 1)
        steps.append(ExpansionStep(graph=smaller, cover=IsometricCover(v1, v2), result=larger))
    return steps


def _isometric_subset_masks(graph: CubeGraph) -> list[int]:
    """
    Vertex-index bitmasks of all isometric vertex subsets.
    """
    order = graph.vertices
    found = []
    for mask in range(1, 1 << len(order)):
        subset = [order[k] for k in range(len(order)) if mask >> k & 1]
        if is_isometric(graph, subset):
            found.append(mask)
    return found


def enumerate_covers(
    graph: CubeGraph, budget: int | None = None, max_vertices: int = 10
) -> Iterator[IsometricCover]:
    """
    Valid isometric covers of a small graph, each unordered pair once, in deterministic order.

    Parts range over all isometric vertex subsets when the graph has at most `max_vertices`
    vertices; otherwise over the whole vertex set, the halfspaces and their boundaries. At most
    `budget` covers are produced (defaults to `settings.cover_search_budget`).
    """
    limit = settings.cover_search_budget if budget is None else budget
    order = graph.vertices
    position = {v: k for k, v in enumerate(order)}
    full = (1 << len(order)) - 1

    if len(order) <= max_vertices:
        parts = _isometric_subset_masks(graph)
    else:
        candidates = {graph.vertex_set}
        for theta in graph.theta_classes():
            candidates.update(
                {
                    theta.minus,
                    theta.plus,
                    theta.minus | theta.boundary_plus,
                    theta.plus | theta.boundary_minus,
                }
            )
        parts = sorted(
            sum(1 << position[v] for v in part) for part in candidates if is_isometric(graph, part)
        )

    edge_masks = [(1 << position[u]) | (1 << position[w]) for u, w in graph.edges()]
    produced = 0
    for first, second in _pairs(parts):
        if first | second != full or not first & second:
            continue
        if any(e & first != e and e & second != e for e in edge_masks):
            continue
        yield IsometricCover(
            frozenset(order[k] for k in range(len(order)) if first >> k & 1),
            frozenset(order[k] for k in range(len(order)) if second >> k & 1),
        )
        produced += 1
        if produced >= limit:
            return


def _pairs(parts: list[int]) -> Iterator[tuple[int, int]]:
    for k, first in enumerate(parts):
        for second in parts[k:]:
            yield first, second
