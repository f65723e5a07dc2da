"""
Isometric and convex cycles.

In hypercube labels a cycle of length 2k is isometric exactly when its edges flip coordinates
c_1, …, c_k, c_1, …, c_k for k distinct coordinates: every subpath of length at most k then
flips distinct coordinates and is a geodesic.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from pcube.conf import settings
from pcube.core.graph import CubeGraph
from pcube.core.labels import Label, bit, hamming
from pcube.exceptions import BudgetExceeded, NotAnIsometricCycle


@dataclass(frozen=True, slots=True)
class Cycle:
    """
    A cycle of a partial cube in cyclic order.

    The order starts at the smallest label and continues towards the smaller of its two cycle
    neighbors, so equal cycles compare equal.

    Attributes
    ----------
    vertices : tuple[Label, ...]
        The labels in cyclic order.
    """

    vertices: tuple[Label, ...]

    @classmethod
    def from_sequence(cls, labels: Iterable[Label]) -> Cycle:
        sequence = list(labels)
        start = sequence.index(min(sequence))
        rotated = sequence[start:] + sequence[:start]
        if len(rotated) > 2 and rotated[-1] < rotated[1]:
            rotated = [rotated[0], *reversed(rotated[1:])]
        return cls(tuple(rotated))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[Label]:
        return frozenset(self.vertices)

    @property
    def classes(self) -> Label:
        """
        Mask of the Θ-classes crossed by the cycle.
        """
        mask = 0
        for u in self.vertices:
            mask |= u ^ self.vertices[0]
        return mask

    def edges(self) -> tuple[tuple[Label, Label], ...]:
        return tuple(zip(self.vertices, self.vertices[1:] + self.vertices[:1]))

    def antipode(self, v: Label) -> Label:
        k = self.vertices.index(v)
        return self.vertices[(k + len(self.vertices) // 2) % len(self.vertices)]


def isometric_cycles(graph: CubeGraph, max_len: int | None = None, budget: int | None = None) -> list[Cycle]:
    """
    All isometric cycles of length at most `max_len` (default and cap `2m`).

    From every start vertex a depth-first search extends sequences of distinct coordinates
    whose prefix walk stays in the graph, never visiting labels below the start; each prefix
    of length k ≥ 2 is closed by flipping the same coordinates again in the same order.

    Raises
    ------
    BudgetExceeded
        When more than `budget` search nodes are expanded (defaults to
        `settings.cycle_search_budget`).
    """
    limit = settings.cycle_search_budget if budget is None else budget
    cap = 2 * graph.m if max_len is None else min(max_len, 2 * graph.m)
    half_cap = cap // 2
    present = graph.vertex_set
    found: dict[frozenset[Label], Cycle] = {}
    expanded = 0

    def close(start: Label, path: list[Label], coords: list[int]) -> None:
        walk = list(path)
        current = path[-1]
        for c in coords[:-1]:
            current ^= bit(c)
            if current not in present or current < start:
                return
            walk.append(current)
        key = frozenset(walk)
        if len(key) == len(walk) and key not in found:
            found[key] = Cycle.from_sequence(walk)

    def extend(start: Label, path: list[Label], coords: list[int]) -> None:
        nonlocal expanded
        expanded += 1
        if expanded > limit:
            raise BudgetExceeded("Isometric cycle search exceeded its budget", budget=limit)
        if len(coords) >= 2:
            close(start, path, coords)
        if len(coords) == half_cap:
            return
        used = 0
        for c in coords:
            used |= bit(c)
        for c in range(graph.m):
            if used >> c & 1:
                continue
            w = path[-1] ^ bit(c)
            if w in present and w > start:
                path.append(w)
                coords.append(c)
                extend(start, path, coords)
                path.pop()
                coords.pop()

    for start in graph.vertices:
        extend(start, [start], [])
    return sorted(found.values(), key=lambda cycle: (cycle.length, cycle.vertices))


def order_cycle(graph: CubeGraph, labels: Iterable[Label]) -> Cycle | None:
    """
    The vertices in cyclic order when they induce a single cycle, else `None`.
    """
    vertex_set = graph.require_all(labels)
    if len(vertex_set) < 4:
        return None
    adjacency = {v: [w for w in vertex_set if hamming(v, w) == 1] for v in vertex_set}
    if any(len(neighbors) != 2 for neighbors in adjacency.values()):
        return None
    start = min(vertex_set)
    walk = [start]
    previous, current = start, min(adjacency[start])
    while current != start:
        walk.append(current)
        a, b = adjacency[current]
        previous, current = current, (b if a == previous else a)
    if len(walk) != len(vertex_set):
        return None
    return Cycle.from_sequence(walk)


def as_isometric_cycle(graph: CubeGraph, cycle: Cycle | Iterable[Label]) -> Cycle:
    """
    Validates a cyclic sequence of labels as an isometric cycle of `graph`.

    Raises
    ------
    NotAnIsometricCycle
        If consecutive labels are not adjacent, labels repeat, or some distance along the
        cycle exceeds the Hamming distance.
    """
    sequence = list(cycle.vertices if isinstance(cycle, Cycle) else cycle)
    graph.require_all(sequence)
    if len(sequence) < 4 or len(sequence) % 2 or len(set(sequence)) != len(sequence):
        raise NotAnIsometricCycle(f"{len(sequence)} labels do not form an even cycle")
    k = len(sequence) // 2
    for a, b in zip(sequence, sequence[1:] + sequence[:1]):
        if hamming(a, b) != 1:
            raise NotAnIsometricCycle(f"Labels {a:#b} and {b:#b} are not adjacent")
    for p, q in combinations(range(len(sequence)), 2):
        along = min(q - p, 2 * k - (q - p))
        if hamming(sequence[p], sequence[q]) != along:
            raise NotAnIsometricCycle(f"Labels {sequence[p]:#b} and {sequence[q]:#b} are closer in the graph")
    return Cycle.from_sequence(sequence)


def convex_cycles(graph: CubeGraph) -> list[Cycle]:
    """
    Every cycle equal to its convex hull.

    A convex cycle is the interval of any of its antipodal pairs, so it suffices to look at
    intervals I(u, v) with 2·d(u, v) vertices inducing a cycle.
    """
    found: dict[frozenset[Label], Cycle] = {}
    for u, v in combinations(graph.vertices, 2):
        d = hamming(u, v)
        if d < 2:
            continue
        interval = graph.interval(u, v)
        if len(interval) != 2 * d or interval in found:
            continue
        cycle = order_cycle(graph, interval)
        if cycle is not None:
            found[interval] = cycle
    return sorted(found.values(), key=lambda cycle: (cycle.length, cycle.vertices))
