"""
Standard partial cubes in their standard labelings.

Coordinates are 0-based: the full subdivision SK_n has original vertices {i} and subdivision
vertices {i, j}, and SK*_n adds ∅.
"""

from __future__ import annotations

import random
from itertools import combinations

from pcube.core.graph import CubeGraph, from_labels
from pcube.core.labels import Label, bit, full_mask
from pcube.exceptions import BadParams


def hypercube(m: int) -> CubeGraph:
    if m < 0:
        raise BadParams("Q_m needs m >= 0")
    return from_labels(m, range(1 << m))


def path(n: int) -> CubeGraph:
    """
    The path on `n` vertices, labeled by the prefixes ∅, {0}, {0,1}, …
    """
    if n < 1:
        raise BadParams("A path needs at least one vertex")
    return from_labels(n - 1, (full_mask(k) for k in range(n)))


def even_cycle(k: int) -> CubeGraph:
    """
    The cycle C_2k: prefixes of {0..k−1} followed by its suffixes.
    """
    if k < 2:
        raise BadParams("C_2k needs k >= 2")
    labels = {full_mask(j) for j in range(k + 1)}
    labels |= {full_mask(k) & ~full_mask(j) for j in range(k + 1)}
    return from_labels(k, labels)


def full_subdivision(n: int) -> CubeGraph:
    if n < 3:
        raise BadParams("SK_n needs n >= 3")
    labels = {bit(i) for i in range(n)} | {bit(i) | bit(j) for i, j in combinations(range(n), 2)}
    return from_labels(n, labels)


def full_subdivision_star(n: int) -> CubeGraph:
    if n < 3:
        raise BadParams("SK*_n needs n >= 3")
    return from_labels(n, set(full_subdivision(n).vertices) | {0})


def q_three_minus() -> CubeGraph:
    """
    Q_3 minus one vertex.
    """
    return from_labels(3, set(range(8)) - {0b111})


def q_minus_minus(m: int) -> CubeGraph:
    """
    Q_m^--: the hypercube minus two antipodal vertices.
    """
    if m < 3:
        raise BadParams("Q_m^-- needs m >= 3")
    return from_labels(m, set(range(1 << m)) - {0, full_mask(m)})


def x_family_removed(m: int, i: int) -> set[Label]:
    """
    Labels deleted from Q_m to obtain X_m^i.

    X_m^{m+1} deletes ∅ and (1,…,1,0); X_m^m also deletes e_m; X_m^{m−k} additionally deletes
    e_1 + e_m, …, e_k + e_m. In particular X_m^1 is Q_m minus e_m, its neighbors and its
    antipode.
    """
    if m < 4 or not 1 <= i <= m + 1:
        raise BadParams("X_m^i needs m >= 4 and 1 <= i <= m + 1")
    last = bit(m - 1)
    removed = {0, full_mask(m) ^ last}
    if i <= m:
        removed.add(last)
    for k in range(m - i):
        removed.add(bit(k) | last)
    return removed


def x_family(m: int, i: int) -> CubeGraph:
    return from_labels(m, set(range(1 << m)) - x_family_removed(m, i))


def random_wiring(lines: int, seed: int | None = None) -> CubeGraph:
    """
    The disk of a random simple wiring diagram on `lines` pseudolines.
    """
    from pcube.cells.wiring import WiringDiagram, disk_from_wiring

    if lines < 1:
        raise BadParams("A wiring diagram needs at least one line")
    return disk_from_wiring(WiringDiagram.random(lines, random.Random(seed)))
