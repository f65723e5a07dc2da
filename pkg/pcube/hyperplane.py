"""
Hyperplanes of Θ-classes and virtual isometric trees.

The hyperplane of class i is the family of boundary labels of G_i^- with coordinate i removed;
two members are adjacent when their parent edges span a square. A family has VC-dimension at
most one exactly when its coordinates are pairwise compatible splits, and then it embeds in an
isometric tree of the hypercube built from those splits.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from pcube.core.graph import CubeGraph
from pcube.core.labels import Label, bit, delete_coordinate, hamming
from pcube.exceptions import NotVCOne
from pcube.minors.families import SetFamily


@dataclass(frozen=True, slots=True)
class Hyperplane:
    """
    Attributes
    ----------
    index : int
        The Θ-class.
    family : SetFamily
        The boundary labels with coordinate `index` deleted, over `m − 1` coordinates.
    edges : tuple[tuple[Label, Label], ...]
        Pairs of members whose parent edges lie in a common square.
    """

    index: int
    family: SetFamily
    edges: tuple[tuple[Label, Label], ...]

    @property
    def members(self) -> frozenset[Label]:
        return self.family.members


def hyperplane(graph: CubeGraph, i: int) -> Hyperplane:
    theta = graph.theta_class(i)
    members = frozenset(delete_coordinate(u, i) for u in theta.boundary_minus)
    # parent edges of two members span a square iff the members differ in one coordinate
    edges = tuple(
        sorted((a, b) for a, b in combinations(sorted(members), 2) if hamming(a, b) == 1)
    )
    return Hyperplane(index=i, family=SetFamily(max(graph.m - 1, 0), members), edges=edges)


def incompatible_pair(family: SetFamily) -> tuple[int, int] | None:
    """
    Two coordinates whose splits of the family are incompatible (all four quadrants occupied).
    """
    for a, b in combinations(range(family.m), 2):
        quadrants = {((x >> a) & 1, (x >> b) & 1) for x in family.members}
        if len(quadrants) == 4:
            return a, b
    return None


def split_compatibility(family: SetFamily) -> bool:
    if not family.members:
        raise ValueError("split_compatibility needs a nonempty family")
    return incompatible_pair(family) is None


@dataclass(frozen=True, slots=True)
class SplitTree:
    """
    An isometric tree of Q_m containing a family as vertices.

    Attributes
    ----------
    m : int
        Universe size.
    vertices : frozenset[Label]
        Family members plus the auxiliary vertices of the tree.
    edges : tuple[tuple[Label, Label], ...]
        Unit edges, each pair sorted.
    """

    m: int
    vertices: frozenset[Label]
    edges: tuple[tuple[Label, Label], ...]

    def distances_from(self, source: Label) -> dict[Label, int]:
        adjacency: dict[Label, list[Label]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        distances = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in distances:
                    distances[w] = distances[u] + 1
                    queue.append(w)
        return distances

    def validate(self, members: Iterable[Label] = ()) -> bool:
        """
        Connected, acyclic, isometric in Q_m and containing `members`.
        """
        if not self.vertices or len(self.edges) != len(self.vertices) - 1:
            return False
        if any(hamming(a, b) != 1 for a, b in self.edges):
            return False
        for source in self.vertices:
            distances = self.distances_from(source)
            if len(distances) != len(self.vertices):
                return False
            if any(distances[v] != hamming(source, v) for v in self.vertices):
                return False
        return set(members) <= self.vertices


def buneman_tree(family: SetFamily) -> SplitTree:
    """
    Realizes a family of compatible splits as an isometric tree of Q_m.

    Coordinates inducing the same bipartition of the family (possibly complemented) form one
    split class, represented by its smallest coordinate. The tree T_0 has as vertices the
    assignments to representatives that agree pairwise with some member (the Buneman
    vertices); it is reached by flipping one representative at a time from a member. Each
    edge of T_0 flips a whole split class and is expanded into a hypercube geodesic flipping
    the class coordinates in increasing order.

    Raises
    ------
    NotVCOne
        If two coordinates are incompatible.
    """
    if not family.members:
        raise ValueError("buneman_tree needs a nonempty family")
    pair = incompatible_pair(family)
    if pair is not None:
        raise NotVCOne(f"Coordinates {pair[0]} and {pair[1]} are incompatible", pair=pair)

    members = sorted(family.members)
    first = members[0]
    constant = 0
    for x in members:
        constant |= x ^ first
    # representative -> [(coordinate, complemented)]
    classes: dict[int, list[tuple[int, int]]] = {}
    pattern_owner: dict[tuple[int, ...], int] = {}
    for c in range(family.m):
        if not constant >> c & 1:
            continue
        pattern = tuple((x >> c) & 1 for x in members)
        complement = tuple(1 - p for p in pattern)
        if pattern in pattern_owner:
            classes[pattern_owner[pattern]].append((c, 0))
        elif complement in pattern_owner:
            representative = pattern_owner[complement]
            classes[representative].append((c, 1))
        else:
            pattern_owner[pattern] = c
            classes[c] = [(c, 0)]
    representatives = sorted(classes)

    quadrants: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for a, b in combinations(representatives, 2):
        quadrants[(a, b)] = {((x >> a) & 1, (x >> b) & 1) for x in members}

    def consistent(label: Label) -> bool:
        return all(((label >> a) & 1, (label >> b) & 1) in seen for (a, b), seen in quadrants.items())

    def align(label: Label, representative: int) -> Label:
        value = (label >> representative) & 1
        for coordinate, complemented in classes[representative]:
            wanted = value ^ complemented
            label = (label & ~bit(coordinate)) | (wanted << coordinate)
        return label

    nodes = {first}
    tree_edges: list[tuple[Label, Label, int]] = []
    queue = deque([first])
    while queue:
        u = queue.popleft()
        for r in representatives:
            w = align(u ^ bit(r), r)
            if w in nodes or not consistent(w):
                continue
            nodes.add(w)
            tree_edges.append((u, w, r))
            queue.append(w)

    vertices = set(nodes)
    edges: list[tuple[Label, Label]] = []
    for u, w, r in tree_edges:
        current = u
        for coordinate in sorted(c for c, _ in classes[r]):
            step = current ^ bit(coordinate)
            vertices.add(step)
            edges.append((min(current, step), max(current, step)))
            current = step
    return SplitTree(m=family.m, vertices=frozenset(vertices), edges=tuple(sorted(edges)))


def is_virtual_isometric_tree(family: SetFamily) -> bool:
    """
    True when the family embeds in an isometric tree of its hypercube; the witness tree is
    built and validated.
    """
    if not family.members or not split_compatibility(family):
        return False
    tree = buneman_tree(family)
    return tree.validate(family.members)
