from __future__ import annotations

from dataclasses import dataclass

from pcube.core.graph import CubeGraph
from pcube.minors.families import is_ample, is_two_dimensional


@dataclass(frozen=True, slots=True)
class MembershipFlags:
    """
    Membership in the minor-closed classes of two-dimensional partial cubes.

    Attributes
    ----------
    two_dimensional : bool
        G ∈ F(Q_3), i.e. VC-dimension at most 2.
    com2 : bool | None
        G ∈ F(Q_3, SK_4), the tope graphs of rank-2 COMs. `None` outside F(Q_3), where the
        convex-subdivision test does not apply.
    ample2 : bool
        G ∈ F(Q_3, C_6), the two-dimensional ample partial cubes.
    """

    two_dimensional: bool
    com2: bool | None
    ample2: bool

    def to_dict(self) -> dict[str, bool | None]:
        return {"F(Q3)": self.two_dimensional, "F(Q3,SK4)": self.com2, "F(Q3,C6)": self.ample2}


def has_convex_full_subdivision(graph: CubeGraph) -> bool:
    """
    True when some maximal full subdivision SK_n (n ≥ 4) is convex.

    A convex SK_4 sits inside a maximal full subdivision, which is then isometric and cannot
    extend to SK*_n, hence is convex as well; so looking at maximal ones suffices.
    """
    from pcube.cells.subdivisions import full_subdivisions

    return any(subdivision.convex for subdivision in full_subdivisions(graph))


def membership(graph: CubeGraph) -> MembershipFlags:
    two_dimensional = is_two_dimensional(graph)
    if not two_dimensional:
        return MembershipFlags(two_dimensional=False, com2=None, ample2=False)
    return MembershipFlags(
        two_dimensional=True,
        com2=not has_convex_full_subdivision(graph),
        ample2=is_ample(graph),
    )
