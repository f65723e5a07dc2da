"""
Vertex labels.

A label is a non-negative `int` used as a bit vector: coordinate `i` is bit `i`, and a set bit
means the vertex lies in the positive halfspace of Θ-class `i`. Coordinates are 0-based in the
whole API; bitstrings in documents put coordinate 0 in the leftmost character.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from enum import Enum

Label = int


class Sign(str, Enum):
    """
    Position of a region relative to one Θ-class.
    """

    MINUS = "-"
    PLUS = "+"
    BOTH = "±"

    @classmethod
    def parse(cls, value: str) -> Sign:
        aliases = {"-": cls.MINUS, "+": cls.PLUS, "±": cls.BOTH, "*": cls.BOTH, "pm": cls.BOTH}
        try:
            return aliases[value]
        except KeyError:
            raise ValueError(f"Unknown sign {value!r}") from None

    @property
    def opposite(self) -> Sign:
        if self is Sign.BOTH:
            return self
        return Sign.PLUS if self is Sign.MINUS else Sign.MINUS


def bit(i: int) -> Label:
    return 1 << i


def popcount(label: Label) -> int:
    return label.bit_count()


def hamming(u: Label, v: Label) -> int:
    return (u ^ v).bit_count()


def full_mask(m: int) -> Label:
    return (1 << m) - 1


def coordinates(mask: Label) -> Iterator[int]:
    """
    Yields the set coordinates of `mask` in increasing order.
    """
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def from_coordinates(coords: Iterable[int]) -> Label:
    label = 0
    for i in coords:
        label |= 1 << i
    return label


def between(u: Label, w: Label, v: Label) -> bool:
    """
    True when `w` lies on a hypercube geodesic from `u` to `v`.
    """
    return (u ^ w) & (w ^ v) == 0


def delete_coordinate(label: Label, i: int) -> Label:
    """
    Removes bit `i` and shifts the higher bits down by one.
    """
    low = label & ((1 << i) - 1)
    return ((label >> (i + 1)) << i) | low


def insert_coordinate(label: Label, i: int, value: int = 0) -> Label:
    low = label & ((1 << i) - 1)
    return ((label >> i) << (i + 1)) | (value << i) | low


def to_bitstring(label: Label, m: int) -> str:
    return "".join("1" if label >> i & 1 else "0" for i in range(m))


def from_bitstring(text: str) -> Label:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"Invalid bitstring {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def format_set(label: Label) -> str:
    """
    Human-readable set notation with 1-based elements, e.g. `{1,3}`.
    """
    return "{" + ",".join(str(i + 1) for i in coordinates(label)) + "}"
