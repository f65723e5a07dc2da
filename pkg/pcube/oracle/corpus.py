"""
Exhaustive and sampled corpora of small partial cubes.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from pcube.canonical import CanonicalForm, canonical_form
from pcube.conf import settings
from pcube.core.graph import CubeGraph, from_labels, isometry_violation
from pcube.core.labels import Label
from pcube.exceptions import BadParams, BudgetExceeded, NotPartialCube
from pcube.logging import logger


@dataclass(frozen=True, slots=True)
class Corpus:
    """
    Partial cubes up to isomorphism.

    Attributes
    ----------
    m : int
        The hypercube Q_m the members were taken from; members may have smaller dimension.
    n_max : int
        Largest number of vertices considered.
    graphs : tuple[CubeGraph, ...]
        One compacted representative per isomorphism class, sorted by size, dimension and
        canonical labels.
    provenance : str
        `exhaustive` or `sampled(seed=…)`.
    """

    m: int
    n_max: int
    graphs: tuple[CubeGraph, ...]
    provenance: str = "exhaustive"

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[CubeGraph]:
        return iter(self.graphs)


def _deduplicate(candidates: Iterable[CubeGraph]) -> tuple[CubeGraph, ...]:
    found: dict[CanonicalForm, CubeGraph] = {}
    for graph in candidates:
        key = canonical_form(graph)
        if key not in found:
            found[key] = CubeGraph(*key)
    return tuple(sorted(found.values(), key=lambda g: (g.n, g.m, g.vertices)))


def enumerate_partial_cubes(m: int, n_max: int | None = None, budget: int | None = None) -> Corpus:
    """
    All partial cubes that embed in Q_m with at most `n_max` vertices, up to isomorphism.

    Every isomorphism class has a representative containing ∅, so the vertex subsets of Q_m
    containing ∅ are scanned; the connected isometric ones are kept.

    Raises
    ------
    BadParams
        If `m` is negative or above 4.
    BudgetExceeded
        When more than `budget` subsets would be visited (defaults to `settings.corpus_budget`).
    """
    if not 0 <= m <= 4:
        raise BadParams("Exhaustive enumeration supports 0 <= m <= 4")
    size = 1 << m
    limit = settings.corpus_budget if budget is None else budget
    cap = size if n_max is None else min(n_max, size)
    subsets = 1 << (size - 1)
    if subsets > limit:
        raise BudgetExceeded(f"Q_{m} has {subsets} vertex subsets containing ∅", budget=limit)

    def candidates() -> Iterator[CubeGraph]:
        for mask in range(subsets):
            if mask.bit_count() + 1 > cap:
                continue
            labels = frozenset([0] + [k + 1 for k in range(size - 1) if mask >> k & 1])
            if isometry_violation(labels, m) is not None:
                continue
            yield from_labels(m, labels)

    graphs = _deduplicate(candidates())
    logger.debug(f"Enumerated {len(graphs)} partial cubes in Q_{m} with at most {cap} vertices")
    return Corpus(m=m, n_max=cap, graphs=graphs)


def _grow(m: int, target: int, rng: random.Random) -> frozenset[Label]:
    """
    A random isometric subset of Q_m grown from ∅ one neighbor at a time.
    """
    current = {0}
    while len(current) < target:
        frontier = sorted({v ^ (1 << i) for v in current for i in range(m)} - current)
        rng.shuffle(frontier)
        for w in frontier:
            if isometry_violation(frozenset(current | {w}), m) is None:
                current.add(w)
                break
        else:
            break
    return frozenset(current)


def sample_partial_cubes(m: int, count: int, seed: int = 0, n_max: int | None = None) -> Corpus:
    """
    Up to `count` pairwise non-isomorphic partial cubes of Q_m grown at random from ∅.

    Target sizes are drawn uniformly from 1..`n_max`; attempts stop after `50 * count` tries.
    """
    if m < 0 or count < 0:
        raise BadParams("Sampling needs m >= 0 and count >= 0")
    rng = random.Random(seed)
    cap = (1 << m) if n_max is None else min(n_max, 1 << m)
    found: dict[CanonicalForm, CubeGraph] = {}
    for _ in range(50 * count):
        if len(found) >= count:
            break
        try:
            graph = from_labels(m, _grow(m, rng.randint(1, cap), rng))
        except NotPartialCube:
            continue
        found.setdefault(canonical_form(graph), graph)
    graphs = tuple(sorted(found.values(), key=lambda g: (g.n, g.m, g.vertices)))
    return Corpus(m=m, n_max=cap, graphs=graphs, provenance=f"sampled(seed={seed})")
