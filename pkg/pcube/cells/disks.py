"""
Disks, antipodes and the classification of gated hulls of isometric cycles.

A disk is a two-dimensional partial cube D containing an isometric cycle C with conv(C) = D.
Such a cycle crosses every Θ-class of D, every vertex of it has its antipode on it, and the
antipodal vertices of D are exactly the vertices of C. Detection therefore starts from the
antipodal vertices.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from pcube.cells.cycles import Cycle, as_isometric_cycle, order_cycle
from pcube.cells.subdivisions import full_subdivisions
from pcube.core.graph import CubeGraph
from pcube.core.hulls import convex_hull, gated_hull, is_gated, is_isometric
from pcube.core.labels import Label
from pcube.exceptions import (
    HostNotTwoDimensional,
    NotADisk,
    NotPartialCube,
    UnknownVertex,
    VerificationFailed,
)
from pcube.minors.families import first_shattered_triple, is_two_dimensional


@dataclass(frozen=True, slots=True)
class Disk:
    """
    Attributes
    ----------
    vertices : frozenset[Label]
        D, in the labels of the host it was found in.
    boundary : tuple[Label, ...]
        ∂D in cyclic order (all vertices for K_1 and K_2).
    m : int
        Number of Θ-classes crossing D.
    """

    vertices: frozenset[Label]
    boundary: tuple[Label, ...]
    m: int

    @property
    def span(self) -> Label:
        base = min(self.vertices)
        mask = 0
        for v in self.vertices:
            mask |= v ^ base
        return mask

    def antipode(self, v: Label) -> Label | None:
        if v not in self.vertices:
            raise UnknownVertex(v)
        w = v ^ self.span
        return w if w in self.vertices else None


def _span(labels: Iterable[Label]) -> Label:
    labels = list(labels)
    mask = 0
    for v in labels:
        mask |= v ^ labels[0]
    return mask


def antipode(graph: CubeGraph, v: Label, within: Iterable[Label] | None = None) -> Label | None:
    """
    The vertex −v with conv(v, −v) equal to the whole graph (or to `within`), if present.
    """
    graph.require(v)
    if within is None:
        w = v ^ graph.span
        return w if w in graph else None
    subset = graph.require_all(within)
    if v not in subset:
        raise UnknownVertex(v)
    w = v ^ _span(subset)
    return w if w in subset else None


def antipodal_vertices(graph: CubeGraph, within: Iterable[Label] | None = None) -> frozenset[Label]:
    subset = graph.vertex_set if within is None else graph.require_all(within)
    return frozenset(v for v in subset if antipode(graph, v, None if within is None else subset) is not None)


def is_antipodal(graph: CubeGraph) -> bool:
    return antipodal_vertices(graph) == graph.vertex_set


def is_disk(graph: CubeGraph, labels: Iterable[Label] | None = None) -> Disk | None:
    """
    The disk structure of `graph` (or of the subgraph induced by `labels`), or `None`.

    The subgraph must be a two-dimensional partial cube whose antipodal vertices induce an
    isometric cycle through all of its Θ-classes; that cycle is the boundary.
    """
    if labels is None:
        sub = graph
    else:
        try:
            sub = graph.induced(labels)
        except NotPartialCube:
            return None
    if not is_two_dimensional(sub):
        return None
    vertices = frozenset(sub.lift(v) for v in sub.vertices)
    if sub.n <= 2:
        return Disk(vertices=vertices, boundary=tuple(sorted(vertices)), m=sub.m)

    boundary = antipodal_vertices(sub)
    if len(boundary) != 2 * sub.m or not is_isometric(sub, boundary):
        return None
    cycle = order_cycle(sub, boundary)
    if cycle is None:
        return None
    lifted = Cycle.from_sequence(sub.lift(v) for v in cycle.vertices)
    return Disk(vertices=vertices, boundary=lifted.vertices, m=sub.m)


def affine_witness(disk: Disk, u: Label, v: Label) -> tuple[Label, Label] | None:
    """
    A boundary pair (w, −w) such that no Θ-class crosses both I(w, u) and I(v, −w).

    Boundary vertices are tried in cyclic order starting from `u` when `u` is on the boundary.

    Raises
    ------
    UnknownVertex
        If `u` or `v` is not in the disk.
    NotADisk
        If some boundary vertex has no antipode in the disk.
    """
    for x in (u, v):
        if x not in disk.vertices:
            raise UnknownVertex(x)
    boundary = list(disk.boundary)
    if u in disk.boundary:
        start = boundary.index(u)
        boundary = boundary[start:] + boundary[:start]
    for w in boundary:
        opposite = disk.antipode(w)
        if opposite is None:
            raise NotADisk(f"Boundary vertex {w:#b} has no antipode")
        if (w ^ u) & (v ^ opposite) == 0:
            return w, opposite
    return None


class CycleKind(str, Enum):
    CONVEX_CYCLE = "convex-cycle"
    Q_THREE_MINUS = "q3-minus"
    FULL_SUBDIVISION = "full-subdivision"
    GATED_DISK = "gated-disk"


@dataclass(frozen=True, slots=True)
class CycleClassification:
    """
    Attributes
    ----------
    kind : CycleKind
        The shape of the gated hull.
    hull : frozenset[Label]
        The gated hull of the cycle.
    n : int | None
        For `FULL_SUBDIVISION`, the number of original vertices.
    disk : Disk | None
        For `GATED_DISK`, the disk conv(C).
    """

    kind: CycleKind
    hull: frozenset[Label]
    n: int | None = None
    disk: Disk | None = None

    def to_dict(self) -> dict[str, object]:
        return {"kind": self.kind.value, "hull": sorted(self.hull), "n": self.n}


def classify_isometric_cycle(graph: CubeGraph, cycle: Cycle | Iterable[Label]) -> CycleClassification:
    """
    Shape of the gated hull of an isometric cycle of a two-dimensional partial cube.

    Cycles of length 4 and 6 have as gated hull the cycle itself, a Q_3^- or a maximal full
    subdivision; longer ones have a gated disk as convex hull.

    Raises
    ------
    HostNotTwoDimensional
        If the host shatters three coordinates.
    NotAnIsometricCycle
        If `cycle` is not an isometric cycle of the host.
    VerificationFailed
        If the hull fits none of the expected shapes.
    """
    triple = first_shattered_triple(graph)
    if triple is not None:
        raise HostNotTwoDimensional(shattered=triple)
    cycle = as_isometric_cycle(graph, cycle)

    if cycle.length >= 8:
        hull = convex_hull(graph, cycle.vertices).vertices
        if not is_gated(graph, hull):
            raise VerificationFailed("convex hull of a long isometric cycle is gated")
        disk = is_disk(graph, hull)
        if disk is None:
            raise VerificationFailed("convex hull of a long isometric cycle is a disk")
        return CycleClassification(kind=CycleKind.GATED_DISK, hull=hull, disk=disk)

    hull = gated_hull(graph, cycle.vertices)
    if hull == cycle.vertex_set:
        return CycleClassification(kind=CycleKind.CONVEX_CYCLE, hull=hull)
    if len(hull) == 7 and hull == convex_hull(graph, cycle.vertices).vertices:
        return CycleClassification(kind=CycleKind.Q_THREE_MINUS, hull=hull)
    for subdivision in full_subdivisions(graph, n_min=3):
        if subdivision.vertices == hull:
            return CycleClassification(kind=CycleKind.FULL_SUBDIVISION, hull=hull, n=subdivision.n)
    raise VerificationFailed("gated hull of a short isometric cycle is a cycle, Q3- or full subdivision")
