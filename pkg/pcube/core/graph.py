from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from pcube.core.labels import (
    Label,
    Sign,
    between,
    bit,
    coordinates,
    full_mask,
    hamming,
    to_bitstring,
)
from pcube.exceptions import (
    EmptyRegion,
    InvalidLabel,
    NotConnected,
    NotIsometric,
    UnknownCoordinate,
    UnknownVertex,
)
from pcube.logging import logger


@dataclass(frozen=True, slots=True)
class Region:
    """
    An intersection of halfspaces, one sign per coordinate.

    `Sign.PLUS` / `Sign.MINUS` keep only the vertices on that side of the class, `Sign.BOTH`
    leaves the class free. In a partial cube the selected vertices always form a convex set.

    Attributes
    ----------
    signs : tuple[Sign, ...]
        One sign per coordinate of the hosting graph.
    """

    signs: tuple[Sign, ...]

    @classmethod
    def full(cls, m: int) -> Region:
        return cls(tuple(Sign.BOTH for _ in range(m)))

    @classmethod
    def from_masks(cls, m: int, fixed: Label, values: Label) -> Region:
        signs = []
        for i in range(m):
            if not fixed >> i & 1:
                signs.append(Sign.BOTH)
            else:
                signs.append(Sign.PLUS if values >> i & 1 else Sign.MINUS)
        return cls(tuple(signs))

    @classmethod
    def parse(cls, text: str) -> Region:
        return cls(tuple(Sign.parse(ch) for ch in text))

    @property
    def m(self) -> int:
        return len(self.signs)

    @property
    def fixed(self) -> Label:
        """
        Mask of the coordinates with a definite sign.
        """
        return sum(1 << i for i, s in enumerate(self.signs) if s is not Sign.BOTH)

    @property
    def values(self) -> Label:
        return sum(1 << i for i, s in enumerate(self.signs) if s is Sign.PLUS)

    @property
    def free(self) -> Label:
        return full_mask(self.m) & ~self.fixed

    def matches(self, label: Label) -> bool:
        return (label ^ self.values) & self.fixed == 0

    def select(self, graph: CubeGraph) -> frozenset[Label]:
        fixed, values = self.fixed, self.values
        return frozenset(v for v in graph.vertices if (v ^ values) & fixed == 0)

    def restrict(self, i: int, sign: Sign) -> Region:
        signs = list(self.signs)
        signs[i] = sign
        return Region(tuple(signs))

    def __str__(self) -> str:
        return "".join(s.value for s in self.signs)


@dataclass(frozen=True, slots=True)
class ThetaClass:
    """
    A Djoković–Winkler class of a partial cube, i.e. one coordinate of its embedding.

    Attributes
    ----------
    index : int
        The coordinate.
    edges : tuple[tuple[Label, Label], ...]
        The edges flipping the coordinate, each oriented from the minus to the plus side.
    minus, plus : frozenset[Label]
        The complementary halfspaces G_i^- and G_i^+.
    boundary_minus, boundary_plus : frozenset[Label]
        Endpoints of the class edges on either side.
    """

    index: int
    edges: tuple[tuple[Label, Label], ...]
    minus: frozenset[Label]
    plus: frozenset[Label]
    boundary_minus: frozenset[Label]
    boundary_plus: frozenset[Label]

    def side(self, sign: Sign) -> frozenset[Label]:
        if sign is Sign.BOTH:
            return self.minus | self.plus
        return self.plus if sign is Sign.PLUS else self.minus

    def boundary(self, sign: Sign) -> frozenset[Label]:
        if sign is Sign.BOTH:
            return self.boundary_minus | self.boundary_plus
        return self.boundary_plus if sign is Sign.PLUS else self.boundary_minus


@dataclass(frozen=True, slots=True)
class CubeGraph:
    """
    A partial cube given by the hypercube labels of its vertices.

    Edges are the label pairs at Hamming distance one, and graph distance equals Hamming
    distance. Instances are immutable; build them through `from_labels`, which validates
    connectivity and isometry and compacts unused coordinates. The bare constructor trusts its
    input and is reserved for relabelings of already validated graphs.

    Attributes
    ----------
    m : int
        Number of coordinates, the isometric dimension.
    vertices : tuple[Label, ...]
        The labels in increasing order.
    coordinate_map : tuple[int, ...]
        For each coordinate, the coordinate of the input labels it came from.
    offset : Label
        Bits of the input coordinates dropped during compaction (constant on all labels).
    """

    m: int
    vertices: tuple[Label, ...]
    coordinate_map: tuple[int, ...] = field(default=(), compare=False)
    offset: Label = field(default=0, compare=False)
    _index: dict[Label, int] = field(init=False, repr=False, compare=False, hash=False)
    _cache: dict[str, Any] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(self.vertices)})
        object.__setattr__(self, "_cache", {})
        if not self.coordinate_map:
            object.__setattr__(self, "coordinate_map", tuple(range(self.m)))

    @classmethod
    def from_labels(cls, m: int, labels: Iterable[Label]) -> CubeGraph:
        return from_labels(m, labels)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.vertices)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[Label]:
        cached = self._cache.get("vertex_set")
        if cached is None:
            cached = self._cache["vertex_set"] = frozenset(self.vertices)
        return cached

    @property
    def span(self) -> Label:
        return full_mask(self.m)

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def require(self, *labels: Label) -> None:
        for label in labels:
            if label not in self._index:
                raise UnknownVertex(label)

    def require_all(self, labels: Iterable[Label]) -> frozenset[Label]:
        result = frozenset(labels)
        for label in result:
            if label not in self._index:
                raise UnknownVertex(label)
        return result

    def require_coordinate(self, i: int) -> None:
        if not 0 <= i < self.m:
            raise UnknownCoordinate(i, self.m)

    def neighbors(self, v: Label) -> tuple[Label, ...]:
        self.require(v)
        return tuple(v ^ bit(i) for i in range(self.m) if v ^ bit(i) in self._index)

    def edges(self) -> tuple[tuple[Label, Label], ...]:
        """
        All edges, each as `(u, v)` with `v = u | bit(i)` for the flipped coordinate `i`.
        """
        cached = self._cache.get("edges")
        if cached is None:
            result = []
            for u in self.vertices:
                for i in range(self.m):
                    if not u >> i & 1 and u | bit(i) in self._index:
                        result.append((u, u | bit(i)))
            cached = self._cache["edges"] = tuple(sorted(result))
        return cached

    def distance(self, u: Label, v: Label) -> int:
        self.require(u, v)
        return hamming(u, v)

    def interval(self, u: Label, v: Label) -> frozenset[Label]:
        """
        I(u, v): the vertices lying on some shortest (u, v)-path.
        """
        self.require(u, v)
        return frozenset(w for w in self.vertices if between(u, w, v))

    def halfspace(self, i: int, sign: Sign) -> frozenset[Label]:
        self.require_coordinate(i)
        if sign is Sign.BOTH:
            return self.vertex_set
        want = bit(i) if sign is Sign.PLUS else 0
        return frozenset(v for v in self.vertices if v & bit(i) == want)

    def theta_class(self, i: int) -> ThetaClass:
        self.require_coordinate(i)
        cache_key = f"theta:{i}"
        cached = self._cache.get(cache_key)
        if cached is not None:
            return cached
        b = bit(i)
        edges = tuple((u, u | b) for u in self.vertices if not u & b and u | b in self._index)
        cached = self._cache[cache_key] = ThetaClass(
            index=i,
            edges=edges,
            minus=frozenset(v for v in self.vertices if not v & b),
            plus=frozenset(v for v in self.vertices if v & b),
            boundary_minus=frozenset(u for u, _ in edges),
            boundary_plus=frozenset(v for _, v in edges),
        )
        return cached

    def theta_classes(self) -> tuple[ThetaClass, ...]:
        return tuple(self.theta_class(i) for i in range(self.m))

    def induced(self, labels: Iterable[Label]) -> CubeGraph:
        """
        The subgraph induced by `labels`, validated and compacted.

        `lift` on the result maps its labels back to labels of this graph.
        """
        return from_labels(self.m, self.require_all(labels))

    def lift(self, label: Label) -> Label:
        """
        Maps a label of this graph to the label system it was compacted from.
        """
        result = self.offset
        for k, original in enumerate(self.coordinate_map):
            if label >> k & 1:
                result |= 1 << original
        return result

    def relabel(self, shift: Label, permutation: tuple[int, ...]) -> CubeGraph:
        """
        Applies `label ^ shift` followed by moving coordinate `i` to `permutation[i]`.
        """
        if sorted(permutation) != list(range(self.m)):
            raise ValueError("permutation must rearrange all coordinates")
        relabeled = []
        for v in self.vertices:
            w = v ^ shift
            relabeled.append(sum(1 << permutation[i] for i in coordinates(w)))
        return CubeGraph(self.m, tuple(sorted(relabeled)))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def bitstrings(self) -> list[str]:
        return [to_bitstring(v, self.m) for v in self.vertices]


def _bfs(start: Label, labels: frozenset[Label] | set[Label], m: int) -> dict[Label, int]:
    distances = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for i in range(m):
            w = u ^ (1 << i)
            if w in labels and w not in distances:
                distances[w] = distances[u] + 1
                queue.append(w)
    return distances


def isometry_violation(labels: frozenset[Label], m: int) -> tuple[Label, Label, int] | None:
    """
    First pair whose distance in the induced subgraph of Q_m differs from its Hamming distance.

    Returns `(u, v, d)` with `d = -1` when `v` is unreachable from `u`, else `None`.
    """
    order = sorted(labels)
    for u in order:
        distances = _bfs(u, labels, m)
        for v in order:
            d = distances.get(v, -1)
            if d != hamming(u, v):
                return u, v, d
    return None


def from_labels(m: int, labels: Iterable[Label]) -> CubeGraph:
    """
    Validates a label set as a partial cube and builds its `CubeGraph`.

    Coordinates constant over all labels are dropped and the remaining ones renumbered in
    increasing order; `coordinate_map` and `offset` of the result record the compaction.

    Raises
    ------
    InvalidLabel
        If the set is empty or some label needs more than `m` bits.
    NotConnected
        If the labels induce a disconnected subgraph of Q_m.
    NotIsometric
        If some pair is farther apart in the induced subgraph than in Q_m.
    """
    label_set = frozenset(labels)
    if m < 0:
        raise InvalidLabel(f"Universe size must be non-negative, got {m}")
    if not label_set:
        raise InvalidLabel("A partial cube needs at least one vertex")
    for label in label_set:
        if label < 0 or label >> m:
            raise InvalidLabel(f"Label {label} does not fit in {m} coordinates")

    base = min(label_set)
    used = 0
    for label in label_set:
        used |= label ^ base
    kept = tuple(coordinates(used))
    offset = base & ~used

    if len(kept) != m:
        compacted = frozenset(sum(((v >> c) & 1) << k for k, c in enumerate(kept)) for v in label_set)
    else:
        compacted = label_set
    width = len(kept)

    reached = _bfs(min(compacted), compacted, width)
    if len(reached) != len(compacted):
        raise NotConnected(
            f"{len(compacted) - len(reached)} of {len(compacted)} vertices are unreachable",
            component=frozenset(reached),
        )

    violation = isometry_violation(compacted, width)
    if violation is not None:
        u, v, d = violation
        raise NotIsometric(
            f"Graph distance {d} differs from Hamming distance {hamming(u, v)}",
            pair=(u, v),
            graph_distance=d,
            hamming_distance=hamming(u, v),
        )

    if width != m:
        logger.debug(f"Compacted {m} coordinates to {width}")
    return CubeGraph(width, tuple(sorted(compacted)), coordinate_map=kept, offset=offset)


def restrict_to_region(graph: CubeGraph, region: Region) -> frozenset[Label]:
    if region.m != graph.m:
        raise ValueError(f"Region has {region.m} signs for a graph with {graph.m} coordinates")
    selected = region.select(graph)
    if not selected:
        raise EmptyRegion(f"Region {region} selects no vertex")
    return selected
