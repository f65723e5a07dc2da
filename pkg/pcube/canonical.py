"""
Canonical forms and isomorphism of partial cubes.

The isometric embedding of a partial cube into a hypercube is unique up to the hypercube's
symmetries, coordinate permutations and a global XOR of the labels. Two partial cubes are
therefore isomorphic exactly when their label sets agree after such a symmetry.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import networkx as nx

from pcube.core.graph import CubeGraph
from pcube.core.labels import Label

CanonicalForm = tuple[int, tuple[Label, ...]]


@lru_cache(maxsize=8192)
def _canonical(m: int, vertices: tuple[Label, ...]) -> CanonicalForm:
    size = 1 << m
    best: tuple[Label, ...] | None = None
    for perm in permutations(range(m)):
        table = [0] * size
        for label in range(size):
            image = 0
            for i in range(m):
                if label >> i & 1:
                    image |= 1 << perm[i]
            table[label] = image
        for base in vertices:
            candidate = tuple(sorted(table[v ^ base] for v in vertices))
            if best is None or candidate < best:
                best = candidate
    return m, best or ()


def canonical_form(graph: CubeGraph) -> CanonicalForm:
    """
    Minimum sorted label tuple over all coordinate permutations and all XOR shifts moving a
    vertex to ∅.

    The orbit of shifts by vertex labels is invariant under the symmetry group, so the minimum
    is a complete isomorphism invariant. Cost grows with `m!`; intended for small `m`.
    """
    return _canonical(graph.m, graph.vertices)


def _invariants(graph: CubeGraph) -> tuple[int, int, int, tuple[int, ...]]:
    degrees = tuple(sorted(len(graph.neighbors(v)) for v in graph.vertices))
    return graph.m, graph.n, len(graph.edges()), degrees


def is_isomorphic(first: CubeGraph, second: CubeGraph) -> bool:
    """
    Graph isomorphism of two partial cubes.
    """
    if _invariants(first) != _invariants(second):
        return False
    if first.m <= 4:
        return canonical_form(first) == canonical_form(second)
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx())
