"""
Shattering, VC-dimension and ampleness of set families.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations
from math import comb

from pcube.core.graph import CubeGraph
from pcube.core.labels import Label, coordinates, from_coordinates
from pcube.exceptions import InvalidLabel


@dataclass(frozen=True, slots=True)
class SetFamily:
    """
    A family of subsets of {0, …, m−1}, each subset a label.

    Unlike a `CubeGraph`, the 1-inclusion graph of a family may be disconnected.

    Attributes
    ----------
    m : int
        Universe size.
    members : frozenset[Label]
        The subsets.
    """

    m: int
    members: frozenset[Label]

    def __post_init__(self) -> None:
        for label in self.members:
            if label < 0 or label >> self.m:
                raise InvalidLabel(f"Member {label} does not fit in {self.m} coordinates")

    @classmethod
    def of(cls, m: int, members: Iterable[Label]) -> SetFamily:
        return cls(m, frozenset(members))

    @classmethod
    def from_graph(cls, graph: CubeGraph) -> SetFamily:
        return cls(graph.m, graph.vertex_set)

    def __len__(self) -> int:
        return len(self.members)

    def trace(self, mask: Label) -> frozenset[Label]:
        return frozenset(member & mask for member in self.members)


@dataclass(frozen=True, slots=True)
class AmpleReport:
    """
    Sizes entering the sandwich inequality |X(F)| ≤ |F| ≤ |X̄(F)|.

    Attributes
    ----------
    size : int
        |F|.
    shattered : int
        Number of shattered coordinate sets, |X̄(F)|.
    strongly_shattered : int
        Number of strongly shattered coordinate sets, |X(F)|.
    """

    size: int
    shattered: int
    strongly_shattered: int

    @property
    def ample(self) -> bool:
        return self.shattered == self.strongly_shattered

    def to_dict(self) -> dict[str, int | bool]:
        return {
            "size": self.size,
            "shattered": self.shattered,
            "strongly_shattered": self.strongly_shattered,
            "ample": self.ample,
        }


def _as_family(family: SetFamily | CubeGraph) -> SetFamily:
    if isinstance(family, CubeGraph):
        return SetFamily.from_graph(family)
    return family


def shattered(family: SetFamily | CubeGraph, mask: Label) -> bool:
    """
    True when the traces of the members on `mask` realize all `2 ** |mask|` patterns.
    """
    family = _as_family(family)
    return len(family.trace(mask)) == 1 << mask.bit_count()


def strongly_shattered(family: SetFamily | CubeGraph, mask: Label) -> bool:
    """
    True when the family contains a full subcube on the coordinates of `mask`.
    """
    family = _as_family(family)
    needed = 1 << mask.bit_count()
    groups: dict[Label, set[Label]] = defaultdict(set)
    for member in family.members:
        group = groups[member & ~mask]
        group.add(member & mask)
        if len(group) == needed:
            return True
    return False


def _complex(family: SetFamily, test: Callable[[SetFamily, Label], bool]) -> list[Label]:
    """
    All coordinate sets passing `test`, assuming the passing sets form a simplicial complex.

    Candidates of size k+1 are generated only from sets of size k all of whose k-subsets pass.
    """
    layer = [0] if test(family, 0) else []
    result = list(layer)
    while layer:
        current = set(layer)
        candidates: set[Label] = set()
        for mask in layer:
            for i in range(family.m):
                if mask >> i & 1:
                    continue
                grown = mask | (1 << i)
                if all(grown & ~(1 << j) in current for j in coordinates(grown)):
                    candidates.add(grown)
        layer = sorted(c for c in candidates if test(family, c))
        result.extend(layer)
    return result


def shattered_sets(family: SetFamily | CubeGraph) -> list[Label]:
    """
    The shattered complex X̄(F), as coordinate masks sorted by size then value.
    """
    family = _as_family(family)
    if not family.members:
        return []
    return _complex(family, shattered)


def strongly_shattered_sets(family: SetFamily | CubeGraph) -> list[Label]:
    """
    The strongly shattered complex X(F).
    """
    family = _as_family(family)
    if not family.members:
        return []
    return _complex(family, strongly_shattered)


def vc_dimension(family: SetFamily | CubeGraph) -> int:
    family = _as_family(family)
    if not family.members:
        raise ValueError("vc_dimension needs a nonempty family")
    return max(mask.bit_count() for mask in shattered_sets(family))


def maximal_shattered_sets(family: SetFamily | CubeGraph) -> list[Label]:
    sets = shattered_sets(family)
    present = set(sets)
    family = _as_family(family)
    return [
        mask
        for mask in sets
        if not any(not mask >> i & 1 and mask | (1 << i) in present for i in range(family.m))
    ]


def ample_report(family: SetFamily | CubeGraph) -> AmpleReport:
    family = _as_family(family)
    if not family.members:
        raise ValueError("ample_report needs a nonempty family")
    report = AmpleReport(
        size=len(family.members),
        shattered=len(shattered_sets(family)),
        strongly_shattered=len(strongly_shattered_sets(family)),
    )
    assert (
        report.strongly_shattered <= report.size <= report.shattered
    ), f"Sandwich inequality violated: {report}"
    return report


def is_ample(family: SetFamily | CubeGraph) -> bool:
    """
    True when every shattered set is strongly shattered.
    """
    return ample_report(family).ample


def first_shattered_triple(graph: CubeGraph) -> Label | None:
    """
    A shattered set of three coordinates, or `None` when the graph is two-dimensional.
    """
    family = SetFamily.from_graph(graph)
    for triple in combinations(range(graph.m), 3):
        mask = from_coordinates(triple)
        if shattered(family, mask):
            return mask
    return None


def is_two_dimensional(graph: CubeGraph | SetFamily) -> bool:
    """
    VC-dimension at most 2, checked on all coordinate triples.
    """
    if isinstance(graph, SetFamily):
        return all(not shattered(graph, from_coordinates(t)) for t in combinations(range(graph.m), 3))
    return first_shattered_triple(graph) is None


def sauer_shelah_bound(m: int, d: int) -> int:
    """
    Φ_d(m) = Σ_{k ≤ d} binom(m, k), the maximum size of a family of VC-dimension d.
    """
    return sum(comb(m, k) for k in range(d + 1))
