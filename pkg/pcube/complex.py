"""
The convex-cycle cell complex, carriers, 2d-amalgam decompositions and Euler characteristics.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import comb
from typing import Any, Literal

import networkx as nx
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from pcube.cells.cycles import Cycle, convex_cycles
from pcube.cells.subdivisions import full_subdivisions
from pcube.completion import com_completion
from pcube.core.graph import CubeGraph, from_labels
from pcube.core.hulls import is_gated
from pcube.core.labels import Label, Sign, coordinates, format_set, hamming
from pcube.exceptions import AmalgamError, HostNotTwoDimensional, NotPartialCube
from pcube.logging import logger
from pcube.minors.families import first_shattered_triple, is_two_dimensional


@dataclass(frozen=True, slots=True)
class CellComplex:
    """
    The 2-dimensional complex whose 2-cells are the convex cycles of a partial cube.

    Attributes
    ----------
    vertices : tuple[Label, ...]
        0-cells.
    edges : tuple[tuple[Label, Label], ...]
        1-cells.
    cells : tuple[Cycle, ...]
        2-cells.
    incidence : tuple[tuple[int, ...], ...]
        For each 2-cell, the indices of its edges in `edges`.
    """

    vertices: tuple[Label, ...]
    edges: tuple[tuple[Label, Label], ...]
    cells: tuple[Cycle, ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def cycle_rank(self) -> int:
        """
        Dimension of the cycle space, |E| − |V| + 1.
        """
        return len(self.edges) - len(self.vertices) + 1

    @property
    def rank(self) -> int:
        """
        GF(2) rank of the cell-edge incidence matrix.
        """
        if not self.cells:
            return 0
        rows = [[0] * len(self.edges) for _ in self.cells]
        for row, edge_indices in zip(rows, self.incidence):
            for k in edge_indices:
                row[k] = 1
        return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(2)).rank()

    @property
    def spans(self) -> bool:
        """
        True when the 2-cells generate the cycle space.
        """
        return self.rank == self.cycle_rank

    def edge_cells(self) -> dict[tuple[Label, Label], list[int]]:
        result: dict[tuple[Label, Label], list[int]] = {edge: [] for edge in self.edges}
        for c, edge_indices in enumerate(self.incidence):
            for k in edge_indices:
                result[self.edges[k]].append(c)
        return result

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.cells)


def cell_complex(graph: CubeGraph) -> CellComplex:
    edges = graph.edges()
    position = {edge: k for k, edge in enumerate(edges)}
    cells = tuple(convex_cycles(graph))
    incidence = tuple(
        tuple(sorted(position[(min(a, b), max(a, b))] for a, b in cycle.edges())) for cycle in cells
    )
    return CellComplex(vertices=graph.vertices, edges=edges, cells=cells, incidence=incidence)


def carrier(graph: CubeGraph, i: int) -> frozenset[Label]:
    """
    N(E_i): the vertices of the convex cycles crossed by class `i` and of the edges of class `i`.
    """
    theta = graph.theta_class(i)
    result = set(theta.boundary_minus | theta.boundary_plus)
    for cycle in convex_cycles(graph):
        if cycle.classes >> i & 1:
            result.update(cycle.vertices)
    return frozenset(result)


def half_carrier(graph: CubeGraph, i: int, sign: Sign) -> frozenset[Label]:
    """
    N^±(E_i) = N(E_i) ∩ G_i^±.
    """
    return carrier(graph, i) & graph.halfspace(i, sign)


def extended_halfspace(graph: CubeGraph, i: int, sign: Sign) -> frozenset[Label]:
    """
    G_i^sign ∪ N^{−sign}(E_i), the halfspace grown by the opposite half-carrier.
    """
    if sign is Sign.BOTH:
        return graph.vertex_set
    return graph.halfspace(i, sign) | half_carrier(graph, i, sign.opposite)


@dataclass(slots=True)
class AmalgamTree:
    """
    A node of a 2d-amalgam decomposition.

    Attributes
    ----------
    vertices : frozenset[Label]
        The vertices of the node, in host labels.
    kind : str
        `vertex`, `edge`, `cycle` or `full-subdivision` for leaves; `articulation` or
        `amalgam` for internal nodes.
    split_class : int | None
        For `amalgam` nodes, the host Θ-class E_i whose halfspace separates the parts.
    split_vertex : Label | None
        For `articulation` nodes, the cut vertex.
    children : list[AmalgamTree]
        The two parts of an internal node.
    """

    vertices: frozenset[Label]
    kind: str
    split_class: int | None = None
    split_vertex: Label | None = None
    children: list[AmalgamTree] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list[AmalgamTree]:
        if self.is_leaf:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind, "vertices": sorted(self.vertices)}
        if self.split_class is not None:
            data["split_class"] = self.split_class
        if self.split_vertex is not None:
            data["split_vertex"] = self.split_vertex
        if self.children:
            data["children"] = [child.to_dict() for child in self.children]
        return data

    def render(self, indent: int = 0) -> list[str]:
        line = f"{'  ' * indent}{self.kind} ({len(self.vertices)} vertices)"
        if self.split_class is not None:
            line += f" split on class {self.split_class + 1}"
        if self.split_vertex is not None:
            line += f" at {format_set(self.split_vertex)}"
        lines = [line]
        for child in self.children:
            lines.extend(child.render(indent + 1))
        return lines


def _leaf_kind(graph: CubeGraph) -> str | None:
    if graph.n == 1:
        return "vertex"
    if graph.n == 2:
        return "edge"
    if len(graph.edges()) == graph.n and all(len(graph.neighbors(v)) == 2 for v in graph.vertices):
        return "cycle"
    if any(h.vertices == graph.vertex_set for h in full_subdivisions(graph)):
        return "full-subdivision"
    return None


def _articulation_parts(graph: CubeGraph) -> tuple[Label, frozenset[Label], frozenset[Label]] | None:
    network = graph.to_networkx()
    points = sorted(nx.articulation_points(network))
    if not points:
        return None
    cut = points[0]
    network.remove_node(cut)
    components = sorted((sorted(c) for c in nx.connected_components(network)), key=lambda c: c[0])
    first = frozenset(components[0]) | {cut}
    rest = frozenset(v for c in components[1:] for v in c) | {cut}
    return cut, first, rest


def _gated_cells(graph: CubeGraph) -> list[frozenset[Label]]:
    cells = [c.vertex_set for c in convex_cycles(graph) if is_gated(graph, c.vertices)]
    cells.extend(h.vertices for h in full_subdivisions(graph) if h.convex and h.gated)
    return cells


def _amalgam_candidates(graph: CubeGraph) -> Iterator[tuple[int, frozenset[Label], frozenset[Label]]]:
    """
    Splits along a class crossing one of two gated cells that share an edge.

    Yields `(i, G_i^{−σ} ∪ N^σ(E_i), G_i^σ)` where σ is the side holding the second cell, for
    every such split that is a 2d-amalgam. A class that cuts a full subdivision leaves part of
    it in the intersection, which then fails maximality, so only some classes qualify.
    """
    cells = _gated_cells(graph)
    seen: set[tuple[int, Sign]] = set()
    for first in cells:
        for second in cells:
            shared = first & second
            if first == second or len(shared) != 2:
                continue
            a, b = sorted(shared)
            if hamming(a, b) != 1:
                continue
            base = min(first)
            span = 0
            for v in first:
                span |= v ^ base
            for i in coordinates(span & ~(a ^ b)):
                sides = {v >> i & 1 for v in second}
                if len(sides) != 1:
                    continue
                sign = Sign.PLUS if sides.pop() else Sign.MINUS
                if (i, sign) in seen:
                    continue
                seen.add((i, sign))
                kept = graph.halfspace(i, sign)
                grown = graph.halfspace(i, sign.opposite) | half_carrier(graph, i, sign)
                if grown != graph.vertex_set and is_two_dimensional_amalgam(graph, grown, kept):
                    yield i, grown, kept


def amalgam_decompose(graph: CubeGraph, *, check_dimension: bool = True) -> AmalgamTree:
    """
    Decomposes a two-dimensional partial cube into gated cycles and gated full subdivisions.

    Graphs with a cut vertex are split at their smallest articulation point; 2-connected
    graphs are split along a class crossing one of two gated cells sharing an edge. Splits are
    tried in order until both parts decompose into cells that are gated in `graph`. With
    `check_dimension=False` the host is not tested first and a graph of higher dimension
    usually ends in `AmalgamError`.

    Raises
    ------
    HostNotTwoDimensional
        If the graph shatters three coordinates.
    AmalgamError
        If a 2-connected part admits no split.
    """
    if check_dimension:
        triple = first_shattered_triple(graph)
        if triple is not None:
            raise HostNotTwoDimensional(f"Coordinates {format_set(triple)} are shattered", shattered=triple)

    known: dict[frozenset[Label], AmalgamTree | None] = {}

    def decompose(labels: frozenset[Label]) -> AmalgamTree | None:
        if labels not in known:
            known[labels] = search(labels)
        return known[labels]

    def split(node: AmalgamTree, parts: tuple[frozenset[Label], ...]) -> AmalgamTree | None:
        children = []
        for part in parts:
            child = decompose(part)
            if child is None:
                return None
            children.append(child)
        node.children = children
        return node

    def search(labels: frozenset[Label]) -> AmalgamTree | None:
        sub = graph.induced(labels)
        kind = _leaf_kind(sub)
        if kind is not None:
            if kind in ("vertex", "edge") or is_gated(graph, labels):
                return AmalgamTree(vertices=labels, kind=kind)
            return None

        articulation = _articulation_parts(sub)
        if articulation is not None:
            cut, first, rest = articulation
            logger.debug(f"Articulation split at {format_set(sub.lift(cut))}")
            node = AmalgamTree(vertices=labels, kind="articulation", split_vertex=sub.lift(cut))
            tree = split(
                node,
                (frozenset(sub.lift(v) for v in first), frozenset(sub.lift(v) for v in rest)),
            )
            if tree is not None:
                return tree

        for i, grown, kept in _amalgam_candidates(sub):
            host_class = sub.coordinate_map[i]
            logger.debug(f"Amalgam split along class {host_class}")
            node = AmalgamTree(vertices=labels, kind="amalgam", split_class=host_class)
            tree = split(
                node,
                (frozenset(sub.lift(v) for v in grown), frozenset(sub.lift(v) for v in kept)),
            )
            if tree is not None:
                return tree
        return None

    tree = decompose(graph.vertex_set)
    if tree is None:
        raise AmalgamError(f"No amalgam split found for a part with {graph.n} vertices")
    return tree


def validate_amalgam_tree(graph: CubeGraph, tree: AmalgamTree) -> bool:
    """
    True when every internal node is the union of its children and splits as a 2d-amalgam,
    and every leaf is a vertex, an edge, a gated cycle or a gated full subdivision of `graph`.
    """
    if tree.is_leaf:
        if tree.kind in ("vertex", "edge"):
            return True
        return tree.kind in ("cycle", "full-subdivision") and is_gated(graph, tree.vertices)
    first, second = tree.children
    if first.vertices | second.vertices != tree.vertices:
        return False
    sub = graph.induced(tree.vertices)
    project = {sub.lift(v): v for v in sub.vertices}
    if not is_two_dimensional_amalgam(
        sub, (project[v] for v in first.vertices), (project[v] for v in second.vertices)
    ):
        return False
    return validate_amalgam_tree(graph, first) and validate_amalgam_tree(graph, second)


def is_two_dimensional_amalgam(graph: CubeGraph, v1: Iterable[Label], v2: Iterable[Label]) -> bool:
    """
    Checks that `graph` is a 2d-amalgam of the subgraphs induced by `v1` and `v2`.

    The parts must cover all vertices and edges with nonempty differences and intersection,
    both parts and their intersection must be two-dimensional partial cubes, and every
    maximal full subdivision of the intersection must be maximal in `graph`.
    """
    first, second = graph.require_all(v1), graph.require_all(v2)
    shared = first & second
    if first | second != graph.vertex_set or not (first - second and second - first and shared):
        return False
    if any(not ({u, v} <= first or {u, v} <= second) for u, v in graph.edges()):
        return False
    try:
        parts = [from_labels(graph.m, part) for part in (first, second, shared)]
    except NotPartialCube:
        return False
    if not all(is_two_dimensional(part) for part in parts):
        return False
    intersection = parts[2]
    maximal = {h.originals for h in full_subdivisions(graph, n_min=3)}
    for h in full_subdivisions(intersection, n_min=3):
        if tuple(sorted(intersection.lift(v) for v in h.originals)) not in maximal:
            return False
    return True


def polyhedral_euler_characteristic(graph: CubeGraph) -> int:
    """
    χ of the complex with a polygon per gated cycle and a simplex per gated full subdivision.

    The 1-skeleton is the graph itself; an SK_n simplex adds its faces of dimension 2 to n − 1.
    """
    chi = graph.n - len(graph.edges())
    chi += sum(1 for c in convex_cycles(graph) if is_gated(graph, c.vertices))
    for h in full_subdivisions(graph):
        if h.gated:
            chi += sum((-1) ** k * comb(h.n, k + 1) for k in range(2, h.n))
    return chi


def euler_characteristic(graph: CubeGraph, choice: Literal["cells", "com", "polyhedral"] = "cells") -> int:
    """
    χ of C(G), of C(G⌐) for the canonical COM completion, or of the polyhedral complex.

    Raises
    ------
    HostNotTwoDimensional
        For `com` and `polyhedral` when the graph shatters three coordinates.
    """
    if choice == "cells":
        return cell_complex(graph).euler_characteristic()
    if choice == "com":
        return cell_complex(com_completion(graph).output).euler_characteristic()
    if choice == "polyhedral":
        triple = first_shattered_triple(graph)
        if triple is not None:
            raise HostNotTwoDimensional(shattered=triple)
        return polyhedral_euler_characteristic(graph)
    raise ValueError(f"Unknown complex {choice!r}")
