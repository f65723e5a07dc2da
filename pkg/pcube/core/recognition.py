from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass
from typing import Any

import networkx as nx

from pcube.core.graph import CubeGraph, from_labels
from pcube.core.labels import Label
from pcube.exceptions import HalfspaceNotConvex, NotBipartite, NotConnected
from pcube.logging import logger


@dataclass(frozen=True, slots=True)
class Recognition:
    """
    Result of recognizing an abstract graph as a partial cube.

    Attributes
    ----------
    graph : CubeGraph
        The labeled partial cube. Coordinate `k` is the `k`-th Θ-class discovered.
    labels : dict
        Abstract vertex id to label. The lowest id is labeled ∅.
    classes : tuple[tuple[tuple, ...], ...]
        The edges of the abstract graph grouped by Θ-class, in coordinate order.
    """

    graph: CubeGraph
    labels: dict[Any, Label]
    classes: tuple[tuple[tuple[Any, Any], ...], ...]

    @property
    def m(self) -> int:
        return self.graph.m


def _non_convex_witness(
    graph: nx.Graph, distances: dict[Any, dict[Any, int]], side: frozenset[Hashable]
) -> tuple[Any, ...] | None:
    """
    A shortest path between two vertices of `side` passing outside of it, if any.
    """
    members = sorted(side)
    nodes = sorted(graph.nodes)
    for k, a in enumerate(members):
        for b in members[k + 1 :]:
            dab = distances[a][b]
            for x in nodes:
                if x in side:
                    continue
                if distances[a][x] + distances[x][b] == dab:
                    first = nx.shortest_path(graph, a, x)
                    second = nx.shortest_path(graph, x, b)
                    return tuple(first) + tuple(second[1:])
    return None


def recognize(graph: nx.Graph) -> Recognition:
    """
    Labels an abstract graph as a partial cube, or explains why it is not one.

    Follows Djoković's characterization: the graph must be connected and bipartite and, for
    every edge uv, the set W(u, v) of vertices closer to u than to v must be convex. Edges
    with the same pair {W(u, v), W(v, u)} form a Θ-class; each class becomes one coordinate,
    numbered in order of discovery while scanning the sorted edge list. The positive side of a
    class is the one not containing the base vertex (the lowest id).

    Raises
    ------
    NotConnected, NotBipartite, HalfspaceNotConvex
    """
    if graph.number_of_nodes() == 0:
        raise NotConnected("The empty graph is not a partial cube")
    if not nx.is_connected(graph):
        component = frozenset(nx.node_connected_component(graph, min(graph.nodes)))
        raise NotConnected(
            f"{graph.number_of_nodes() - len(component)} vertices are unreachable", component=component
        )

    nodes = sorted(graph.nodes)
    base = nodes[0]
    distances: dict[Any, dict[Any, int]] = dict(nx.all_pairs_shortest_path_length(graph))

    for u, v in graph.edges:
        if distances[base][u] % 2 == distances[base][v] % 2:
            raise NotBipartite(f"Edge {u}-{v} closes an odd cycle", edge=(u, v))

    everything = frozenset(nodes)
    sides: list[frozenset[Any]] = []
    class_of_side: dict[frozenset[Any], int] = {}
    class_edges: list[list[tuple[Any, Any]]] = []

    for u, v in sorted(tuple(sorted(edge)) for edge in graph.edges):
        w_uv = frozenset(x for x in nodes if distances[x][u] < distances[x][v])
        plus = w_uv if base not in w_uv else everything - w_uv
        k = class_of_side.get(plus)
        if k is None:
            for side in (w_uv, everything - w_uv):
                path = _non_convex_witness(graph, distances, side)
                if path is not None:
                    raise HalfspaceNotConvex(
                        f"W({u},{v}) is not convex: shortest path {list(path)} leaves it",
                        edge=(u, v),
                        path=path,
                    )
            k = class_of_side[plus] = len(sides)
            sides.append(plus)
            class_edges.append([])
        class_edges[k].append((u, v))

    labels = {x: sum(1 << k for k, side in enumerate(sides) if x in side) for x in nodes}
    logger.debug(f"Recognized {len(nodes)} vertices with {len(sides)} Θ-classes")
    cube = from_labels(len(sides), labels.values())
    return Recognition(graph=cube, labels=labels, classes=tuple(tuple(edges) for edges in class_edges))
