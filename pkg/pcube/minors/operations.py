"""
pc-minors: contractions of Θ-classes and restrictions to halfspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from pcube.canonical import is_isomorphic
from pcube.conf import settings
from pcube.core.graph import CubeGraph, Region, from_labels, restrict_to_region
from pcube.core.labels import Label, Sign, coordinates, delete_coordinate, from_coordinates
from pcube.exceptions import BudgetExceeded, EmptyRegion


def _delete_coordinates(label: Label, mask: Label) -> Label:
    for i in sorted(coordinates(mask), reverse=True):
        label = delete_coordinate(label, i)
    return label


def contract(graph: CubeGraph, i: int) -> CubeGraph:
    """
    π_i(G): deletes coordinate `i` from every label and merges the resulting duplicates.

    Coordinates above `i` move down by one.
    """
    graph.require_coordinate(i)
    return from_labels(graph.m - 1, {delete_coordinate(v, i) for v in graph.vertices})


def restrict(graph: CubeGraph, i: int, sign: Sign) -> CubeGraph:
    """
    The subgraph induced by one halfspace of class `i`, with coordinates compacted.
    """
    graph.require_coordinate(i)
    if sign is Sign.BOTH:
        return graph
    selected = graph.halfspace(i, sign)
    if not selected:
        raise EmptyRegion(f"Halfspace {sign.value} of class {i} is empty")
    return from_labels(graph.m, selected)


@dataclass(frozen=True, slots=True)
class MinorSpec:
    """
    A pc-minor description: restrict to `region`, then contract the classes in `contract`.

    Contractions and restrictions commute, so the order of application is immaterial as long
    as contracted classes are left free by the region.

    Attributes
    ----------
    contract : frozenset[int]
        Coordinates of the host to contract.
    region : Region
        Signs over all host coordinates; contracted coordinates must be `Sign.BOTH`.
    """

    contract: frozenset[int]
    region: Region

    def __post_init__(self) -> None:
        clash = [i for i in self.contract if i >= self.region.m or self.region.signs[i] is not Sign.BOTH]
        if clash:
            raise ValueError(f"Contracted coordinates {sorted(clash)} are fixed by the region")


def apply_minor(graph: CubeGraph, spec: MinorSpec) -> CubeGraph:
    selected = restrict_to_region(graph, spec.region)
    mask = from_coordinates(spec.contract)
    width = graph.m - len(spec.contract)
    return from_labels(width, {_delete_coordinates(v, mask) for v in selected})


def _restrictions(graph: CubeGraph, target_m: int, target_n: int) -> list[tuple[Region, frozenset[Label], Label]]:
    """
    Restricted vertex sets of `graph` large enough to map onto a target of the given size.

    Returns `(region, selected vertices, varying coordinates)` for every distinct nonempty
    region selection with at least `target_m` varying coordinates and `target_n` vertices.
    """
    seen: set[frozenset[Label]] = set()
    found = []
    for signs in product((Sign.BOTH, Sign.MINUS, Sign.PLUS), repeat=graph.m):
        region = Region(tuple(signs))
        selected = region.select(graph)
        if len(selected) < target_n or selected in seen:
            continue
        seen.add(selected)
        base = min(selected)
        varying = 0
        for v in selected:
            varying |= v ^ base
        if varying.bit_count() >= target_m:
            found.append((region, selected, varying))
    return found


def contains_pc_minor(graph: CubeGraph, minor: CubeGraph, budget: int | None = None) -> bool:
    """
    True when some restriction followed by contractions of `graph` is isomorphic to `minor`.

    Every distinct region selection is tried; within it, all ways of contracting down to the
    isometric dimension of `minor` among the varying coordinates are tested.

    Raises
    ------
    BudgetExceeded
        When more than `budget` contraction choices are examined
        (defaults to `settings.minor_search_budget`).
    """
    limit = settings.minor_search_budget if budget is None else budget
    examined = 0
    for _, selected, varying in _restrictions(graph, minor.m, minor.n):
        varying_coords = tuple(coordinates(varying))
        surplus = len(varying_coords) - minor.m
        for dropped in combinations(varying_coords, surplus):
            examined += 1
            if examined > limit:
                raise BudgetExceeded("pc-minor search exceeded its budget", budget=limit)
            mask = from_coordinates(dropped)
            image = {_delete_coordinates(v, mask) for v in selected}
            if len(image) != minor.n:
                continue
            candidate = from_labels(graph.m - surplus, image)
            if is_isomorphic(candidate, minor):
                return True
    return False
