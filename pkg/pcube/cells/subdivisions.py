"""
Full subdivisions SK_n inside partial cubes.

The original vertices of an SK_n are pairwise at distance two; the subdivision vertex of a pair
is the one of their two hypercube common neighbors that is adjacent to no other original
vertex. Every SK_n with n ≥ 3 has a unique hypercube vertex adjacent to all its originals, the
vertex added by SK*_n.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from pcube.core.graph import CubeGraph
from pcube.core.hulls import is_convex, is_gated, is_isometric
from pcube.core.labels import Label, bit, coordinates, hamming
from pcube.exceptions import NotFullSubdivision
from pcube.logging import logger

Pair = tuple[Label, Label]


@dataclass(frozen=True, slots=True)
class FullSubdivision:
    """
    An isometric SK_n of a host partial cube.

    Attributes
    ----------
    n : int
        Number of original vertices.
    originals : tuple[Label, ...]
        The original vertices u_1, …, u_n in increasing order.
    subdivision : dict[tuple[Label, Label], Label]
        u_{i,j} for every pair of originals (pair sorted).
    convex, gated : bool
        Whether the vertex set is convex, respectively gated, in the host.
    extends_to_star : bool
        Whether the host contains the vertex adjacent to all originals, i.e. an SK*_n.
    """

    n: int
    originals: tuple[Label, ...]
    subdivision: dict[Pair, Label]
    convex: bool = False
    gated: bool = False
    extends_to_star: bool = False

    @property
    def vertices(self) -> frozenset[Label]:
        return frozenset(self.originals) | frozenset(self.subdivision.values())

    @property
    def center(self) -> Label:
        """
        The hypercube vertex adjacent to every original vertex.
        """
        a, b = self.originals[0], self.originals[1]
        return a ^ b ^ self.subdivision[(a, b)]

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "originals": list(self.originals),
            "subdivision": [[a, b, w] for (a, b), w in sorted(self.subdivision.items())],
            "convex": self.convex,
            "gated": self.gated,
            "extends_to_star": self.extends_to_star,
        }


@dataclass(frozen=True, slots=True)
class StandardEmbedding:
    """
    A host relabeled so that one of its full subdivisions is standard.

    Attributes
    ----------
    graph : CubeGraph
        The relabeled host.
    subdivision : FullSubdivision
        The subdivision in the new labels: u_i = {i}, u_{i,j} = {i, j}.
    shift : Label
        The XOR applied to the old labels.
    permutation : tuple[int, ...]
        Old coordinate `c` moves to `permutation[c]` after the shift.
    """

    graph: CubeGraph
    subdivision: FullSubdivision
    shift: Label
    permutation: tuple[int, ...]


def _subdivision_vertex(present: frozenset[Label], originals: tuple[Label, ...], a: Label, b: Label) -> Label | None:
    i, j = coordinates(a ^ b)
    found = [
        c
        for c in (a ^ bit(i), a ^ bit(j))
        if c in present and not any(hamming(c, o) == 1 for o in originals if o not in (a, b))
    ]
    return found[0] if len(found) == 1 else None


def as_full_subdivision(graph: CubeGraph, originals: Iterable[Label]) -> FullSubdivision | None:
    """
    The isometric SK_n of `graph` with the given original vertices, if there is one.
    """
    ordered = tuple(sorted(graph.require_all(originals)))
    if len(ordered) < 3:
        return None
    if any(hamming(a, b) != 2 for a, b in combinations(ordered, 2)):
        return None
    present = graph.vertex_set
    subdivision: dict[Pair, Label] = {}
    for a, b in combinations(ordered, 2):
        w = _subdivision_vertex(present, ordered, a, b)
        if w is None:
            return None
        subdivision[(a, b)] = w

    vertices = frozenset(ordered) | frozenset(subdivision.values())
    n = len(ordered)
    if len(vertices) != n + n * (n - 1) // 2:
        return None
    edge_count = sum(1 for u, v in combinations(vertices, 2) if hamming(u, v) == 1)
    if edge_count != n * (n - 1) or not is_isometric(graph, vertices):
        return None

    center = ordered[0] ^ ordered[1] ^ subdivision[(ordered[0], ordered[1])]
    return FullSubdivision(
        n=n,
        originals=ordered,
        subdivision=subdivision,
        convex=is_convex(graph, vertices),
        gated=is_gated(graph, vertices),
        extends_to_star=center in present and center not in vertices,
    )


def full_subdivisions(graph: CubeGraph, n_min: int = 4) -> list[FullSubdivision]:
    """
    Maximal isometric full subdivisions SK_n with n ≥ `n_min`.

    Candidate original sets are the cliques of the relation "at distance two with a common
    neighbor"; a valid candidate is kept unless its originals are contained in those of
    another valid candidate. Results are sorted by their vertex labels.
    """
    if n_min < 3:
        raise ValueError("full_subdivisions needs n_min >= 3")
    present = graph.vertex_set
    auxiliary = nx.Graph()
    auxiliary.add_nodes_from(graph.vertices)
    for a, b in combinations(graph.vertices, 2):
        if hamming(a, b) != 2:
            continue
        i, j = coordinates(a ^ b)
        if a ^ bit(i) in present or a ^ bit(j) in present:
            auxiliary.add_edge(a, b)

    valid: list[FullSubdivision] = []
    for clique in nx.enumerate_all_cliques(auxiliary):
        if len(clique) < n_min:
            continue
        candidate = as_full_subdivision(graph, clique)
        if candidate is not None:
            valid.append(candidate)

    maximal = [
        h
        for h in valid
        if not any(other.n > h.n and set(h.originals) <= set(other.originals) for other in valid)
    ]
    maximal.sort(key=lambda h: sorted(h.vertices))
    logger.debug(f"Found {len(maximal)} maximal full subdivisions with n >= {n_min}")
    return maximal


def standardize(graph: CubeGraph, subdivision: FullSubdivision) -> StandardEmbedding:
    """
    Relabels `graph` so that `subdivision` gets the standard embedding.

    The labels are XORed with the center of the subdivision, which turns every original into a
    singleton, and the coordinate of the k-th original is moved to position k; the remaining
    coordinates follow in their old order.

    Raises
    ------
    NotFullSubdivision
        If `subdivision` is not an isometric full subdivision of `graph`.
    """
    checked = as_full_subdivision(graph, subdivision.originals)
    if checked is None or checked.subdivision != subdivision.subdivision:
        raise NotFullSubdivision("The vertex sets do not form an isometric full subdivision of the graph")

    shift = checked.center
    singles = []
    for original in checked.originals:
        moved = original ^ shift
        if moved.bit_count() != 1:
            raise NotFullSubdivision(f"Original vertex {original:#b} is not adjacent to the center")
        singles.append(moved.bit_length() - 1)
    rest = [c for c in range(graph.m) if c not in singles]
    permutation = [0] * graph.m
    for position, c in enumerate(singles + rest):
        permutation[c] = position

    def move(label: Label) -> Label:
        return sum(1 << permutation[c] for c in coordinates(label ^ shift))

    relabeled = graph.relabel(shift, tuple(permutation))
    originals = tuple(move(o) for o in checked.originals)
    standard = FullSubdivision(
        n=checked.n,
        originals=originals,
        subdivision={
            (min(move(a), move(b)), max(move(a), move(b))): move(w) for (a, b), w in checked.subdivision.items()
        },
        convex=checked.convex,
        gated=checked.gated,
        extends_to_star=checked.extends_to_star,
    )
    return StandardEmbedding(
        graph=relabeled, subdivision=standard, shift=shift, permutation=tuple(permutation)
    )
