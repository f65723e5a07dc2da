"""
Slow reference implementations used to cross-check the label-based algorithms.

Everything here works on graph distances computed by breadth-first search in networkx, never on
Hamming distances, and tries every candidate explicitly.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

import networkx as nx

from pcube.canonical import is_isomorphic
from pcube.conf import settings
from pcube.core.graph import CubeGraph
from pcube.core.labels import Label, Sign, coordinates
from pcube.exceptions import BudgetExceeded, PcubeError
from pcube.minors.families import SetFamily
from pcube.minors.operations import contract, restrict


def _distances(graph: CubeGraph) -> dict[Label, dict[Label, int]]:
    return dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))


def naive_is_convex(graph: CubeGraph, labels: Iterable[Label]) -> bool:
    """
    Every vertex on a shortest path between two members is a member.
    """
    members = graph.require_all(labels)
    d = _distances(graph)
    for u in members:
        for v in members:
            for w in graph.vertices:
                if w not in members and d[u][w] + d[w][v] == d[u][v]:
                    return False
    return True


def naive_is_gated(graph: CubeGraph, labels: Iterable[Label]) -> bool:
    """
    Every vertex has a member lying on a shortest path to each member.
    """
    members = graph.require_all(labels)
    if not members:
        return False
    d = _distances(graph)
    for v in graph.vertices:
        if not any(all(d[v][x] + d[x][y] == d[v][y] for y in members) for x in members):
            return False
    return True


def naive_shattered(family: SetFamily | CubeGraph, mask: Label) -> bool:
    """
    Every subset of `mask` is the trace of some member.
    """
    members = family.vertices if isinstance(family, CubeGraph) else family.members
    traces = {member & mask for member in members}
    coords = tuple(coordinates(mask))
    for pattern in range(1 << len(coords)):
        target = sum(1 << c for k, c in enumerate(coords) if pattern >> k & 1)
        if target not in traces:
            return False
    return True


def naive_pc_minor(graph: CubeGraph, minor: CubeGraph, budget: int | None = None) -> bool:
    """
    Breadth-first search over sequences of single contractions and restrictions.

    Raises
    ------
    BudgetExceeded
        When more than `budget` graphs are visited (defaults to `settings.minor_search_budget`).
    """
    limit = settings.minor_search_budget if budget is None else budget
    seen: set[tuple[int, tuple[Label, ...]]] = {(graph.m, graph.vertices)}
    queue = deque([graph])
    while queue:
        current = queue.popleft()
        if current.m == minor.m and current.n == minor.n and is_isomorphic(current, minor):
            return True
        if current.m <= minor.m:
            continue
        children: list[CubeGraph] = []
        for i in range(current.m):
            children.append(contract(current, i))
            for sign in (Sign.MINUS, Sign.PLUS):
                try:
                    children.append(restrict(current, i, sign))
                except PcubeError:
                    continue
        for child in children:
            key = (child.m, child.vertices)
            if child.n < minor.n or key in seen:
                continue
            seen.add(key)
            if len(seen) > limit:
                raise BudgetExceeded("pc-minor search visited too many graphs", budget=limit)
            queue.append(child)
    return False
