"""
Wiring diagrams and the disks they generate.

A wiring diagram on L lines is a sequence of columns; each column reverses disjoint blocks of
adjacent positions, and every pair of lines crosses exactly once overall. The faces of the
diagram, labeled by the set of lines above them, form the region graph of an arrangement of
pseudolines, which is a disk.

Text format: the first line is `lines: L`; each further line (or each `|`-separated chunk)
is one column listing its blocks, either a position `p` (swap p and p+1) or a range `p-q`
(reverse positions p..q, i.e. lines crossing at a common point). Positions are 1-based.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations

from pcube.cells.disks import is_disk
from pcube.core.graph import CubeGraph, from_labels
from pcube.core.labels import Label, bit, full_mask
from pcube.exceptions import InvalidDiagram, NotADisk

Block = tuple[int, int]


@dataclass(frozen=True, slots=True)
class WiringDiagram:
    """
    Attributes
    ----------
    lines : int
        Number of lines L.
    columns : tuple[tuple[Block, ...], ...]
        Per column, the reversed blocks as 1-based `(first, last)` positions.
    """

    lines: int
    columns: tuple[tuple[Block, ...], ...]

    @classmethod
    def parse(cls, text: str) -> WiringDiagram:
        rows = [row.strip() for row in text.strip().splitlines() if row.strip() and not row.strip().startswith("#")]
        if not rows:
            raise InvalidDiagram("Empty wiring diagram")
        header = re.fullmatch(r"lines\s*:\s*(\d+)", rows[0])
        if header is None:
            raise InvalidDiagram(f"Expected 'lines: L', got {rows[0]!r}")
        columns = []
        for row in rows[1:]:
            for chunk in row.split("|"):
                if not chunk.strip():
                    continue
                blocks = []
                for token in chunk.split():
                    match = re.fullmatch(r"(\d+)(?:-(\d+))?", token)
                    if match is None:
                        raise InvalidDiagram(f"Invalid swap token {token!r}")
                    first = int(match.group(1))
                    last = int(match.group(2)) if match.group(2) else first + 1
                    blocks.append((first, last))
                columns.append(tuple(blocks))
        diagram = cls(int(header.group(1)), tuple(columns))
        diagram.validate()
        return diagram

    @classmethod
    def random(cls, lines: int, rng: random.Random | None = None) -> WiringDiagram:
        """
        A simple arrangement: adjacent ascending pairs are swapped at random until the order is
        reversed.
        """
        rng = rng or random.Random()
        order = list(range(lines))
        columns = []
        while True:
            ascending = [p for p in range(lines - 1) if order[p] < order[p + 1]]
            if not ascending:
                break
            p = rng.choice(ascending)
            order[p], order[p + 1] = order[p + 1], order[p]
            columns.append(((p + 1, p + 2),))
        return cls(lines, tuple(columns))

    def to_text(self) -> str:
        rows = [f"lines: {self.lines}"]
        for column in self.columns:
            rows.append(" ".join(str(a) if b == a + 1 else f"{a}-{b}" for a, b in column))
        return "\n".join(rows) + "\n"

    def orders(self) -> list[list[int]]:
        """
        The order of the lines, top to bottom, before the first column and after each column.

        Raises
        ------
        InvalidDiagram
            When a block is out of range, blocks of a column overlap, or some pair of lines
            does not cross exactly once.
        """
        order = list(range(self.lines))
        result = [list(order)]
        crossed: set[tuple[int, int]] = set()
        for number, column in enumerate(self.columns, start=1):
            taken: set[int] = set()
            for first, last in column:
                if not 1 <= first < last <= self.lines:
                    raise InvalidDiagram(f"Column {number}: block {first}-{last} is out of range")
                positions = set(range(first, last + 1))
                if positions & taken:
                    raise InvalidDiagram(f"Column {number}: blocks overlap")
                taken |= positions
                block = order[first - 1 : last]
                for a, b in combinations(block, 2):
                    pair = (min(a, b), max(a, b))
                    if pair in crossed:
                        raise InvalidDiagram(f"Lines {pair[0] + 1} and {pair[1] + 1} cross twice")
                    crossed.add(pair)
                order[first - 1 : last] = reversed(block)
            result.append(list(order))
        missing = self.lines * (self.lines - 1) // 2 - len(crossed)
        if missing:
            raise InvalidDiagram(f"{missing} pairs of lines never cross")
        return result

    def validate(self) -> None:
        self.orders()

    def region_labels(self) -> set[Label]:
        """
        One label per face: the lines above it.
        """
        labels: set[Label] = set()
        for order in self.orders():
            above = 0
            labels.add(above)
            for line in order:
                above |= bit(line)
                labels.add(above)
        return labels

    def boundary(self) -> tuple[Label, ...]:
        """
        The unbounded faces in cyclic order: the faces left of the first column from top to
        bottom, then those right of the last column from bottom to top.
        """
        if self.lines == 0:
            return (0,)
        everything = full_mask(self.lines)
        left = [full_mask(g) for g in range(self.lines + 1)]
        right = [everything & ~full_mask(g) for g in range(1, self.lines)]
        return tuple(left + right)


def disk_from_wiring(diagram: WiringDiagram) -> CubeGraph:
    """
    The region graph of a wiring diagram, one coordinate per line, validated as a disk.

    Raises
    ------
    InvalidDiagram
        If some pair of lines does not cross exactly once.
    NotADisk
        If the region graph fails the disk check.
    """
    graph = from_labels(diagram.lines, diagram.region_labels())
    disk = is_disk(graph)
    if disk is None or (graph.n > 2 and set(disk.boundary) != set(diagram.boundary())):
        raise NotADisk("The region graph is not a disk bounded by the unbounded faces")
    return graph
