"""
Convex hulls, isometric subsets, gates and gated hulls.

All computations rely on the label metric: in a partial cube the interval I(u, v) is the set of
vertices whose labels lie coordinatewise between those of u and v, so convex sets are exactly
the vertex sets selected by a `Region`.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from typing import NamedTuple

from pcube.conf import settings
from pcube.core.graph import CubeGraph, Region
from pcube.core.labels import Label, coordinates, hamming
from pcube.exceptions import TooManyFreeClasses
from pcube.logging import logger


class Hull(NamedTuple):
    region: Region
    vertices: frozenset[Label]


def _agreement(labels: frozenset[Label], m: int) -> tuple[Label, Label]:
    """
    Mask of the coordinates on which all labels agree, and their common values.
    """
    base = next(iter(labels))
    differ = 0
    for label in labels:
        differ |= label ^ base
    fixed = ((1 << m) - 1) & ~differ
    return fixed, base & fixed


def convex_hull(graph: CubeGraph, labels: Iterable[Label]) -> Hull:
    """
    Smallest convex superset of `labels`.

    Every Θ-class crossed by the set is left free, every other class is fixed to the side
    containing the set; the hull is the set of vertices matching the resulting region.
    """
    subset = graph.require_all(labels)
    if not subset:
        raise ValueError("convex_hull needs a nonempty vertex set")
    fixed, values = _agreement(subset, graph.m)
    region = Region.from_masks(graph.m, fixed, values)
    return Hull(region, frozenset(v for v in graph.vertices if (v ^ values) & fixed == 0))


def is_convex(graph: CubeGraph, labels: Iterable[Label]) -> bool:
    subset = graph.require_all(labels)
    if not subset:
        return True
    return convex_hull(graph, subset).vertices == subset


def is_isometric(graph: CubeGraph, labels: Iterable[Label]) -> bool:
    """
    True when distances inside the induced subgraph equal distances in `graph`.
    """
    subset = graph.require_all(labels)
    for source in sorted(subset):
        distances = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for i in range(graph.m):
                w = u ^ (1 << i)
                if w in subset and w not in distances:
                    distances[w] = distances[u] + 1
                    queue.append(w)
        if len(distances) != len(subset):
            return False
        if any(distances[v] != hamming(source, v) for v in subset):
            return False
    return True


def gate(graph: CubeGraph, v: Label, labels: Iterable[Label]) -> Label | None:
    """
    The gate of `v` in `labels`, or `None` when `v` has no gate.

    The gate is the vertex `x` of the set with d(v, x) + d(x, y) = d(v, y) for every `y` in
    the set. When it exists it is the unique nearest vertex, so only nearest vertices are
    tried.
    """
    graph.require(v)
    subset = graph.require_all(labels)
    if not subset:
        raise ValueError("gate needs a nonempty vertex set")
    if v in subset:
        return v
    nearest = min(hamming(v, x) for x in subset)
    for x in sorted(subset):
        if hamming(v, x) != nearest:
            continue
        if all((v ^ x) & (x ^ y) == 0 for y in subset):
            return x
    return None


def is_gated(graph: CubeGraph, labels: Iterable[Label]) -> bool:
    subset = graph.require_all(labels)
    return all(gate(graph, v, subset) is not None for v in graph.vertices)


def gated_hull(graph: CubeGraph, labels: Iterable[Label], budget: int | None = None) -> frozenset[Label]:
    """
    Smallest gated superset of `labels`.

    Gated sets are convex, so every candidate is obtained from the convex hull by freeing some
    of the Θ-classes that do not cross it. All `2 ** k` candidates for the `k` non-crossing
    classes are generated, the gated ones kept, and their intersection returned (gated sets are
    closed under intersection and the whole graph is always a candidate).

    Raises
    ------
    TooManyFreeClasses
        When `2 ** k` exceeds `budget` (defaults to `settings.gated_hull_budget`).
    """
    subset = graph.require_all(labels)
    if not subset:
        raise ValueError("gated_hull needs a nonempty vertex set")
    limit = settings.gated_hull_budget if budget is None else budget

    hull = convex_hull(graph, subset)
    fixed, values = hull.region.fixed, hull.region.values
    free_candidates = tuple(coordinates(fixed))
    if 2 ** len(free_candidates) > limit:
        raise TooManyFreeClasses(
            f"{len(free_candidates)} non-crossing classes exceed the gated hull budget",
            budget=limit,
        )
    if is_gated(graph, hull.vertices):
        return hull.vertices

    result = graph.vertex_set
    for choice in range(1, 2 ** len(free_candidates)):
        freed = sum(1 << free_candidates[k] for k in range(len(free_candidates)) if choice >> k & 1)
        keep = fixed & ~freed
        candidate = frozenset(v for v in graph.vertices if (v ^ values) & keep == 0)
        if candidate >= result:
            continue
        if is_gated(graph, candidate):
            result = result & candidate
    logger.debug(f"Gated hull of {len(subset)} vertices has {len(result)} vertices")
    return result
