"""
Whole-graph reports: structural analysis and the equivalent characterizations of
two-dimensionality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from pcube.cells.cycles import convex_cycles, isometric_cycles
from pcube.cells.disks import is_disk
from pcube.cells.subdivisions import FullSubdivision, full_subdivisions
from pcube.complex import amalgam_decompose, carrier, validate_amalgam_tree
from pcube.completion import ample_completion
from pcube.core.graph import CubeGraph, from_labels
from pcube.core.hulls import gated_hull
from pcube.core.labels import Label, format_set
from pcube.exceptions import PcubeError
from pcube.expansion import expansion_sequence
from pcube.hyperplane import hyperplane, is_virtual_isometric_tree
from pcube.logging import logger
from pcube.minors.families import AmpleReport, SetFamily, ample_report, is_two_dimensional, vc_dimension
from pcube.minors.membership import MembershipFlags, membership


@dataclass(slots=True)
class AnalysisReport:
    """
    Structural summary of a partial cube.

    Attributes
    ----------
    n, m : int
        Number of vertices and of Θ-classes.
    edges : int
        Number of edges.
    class_sizes : list[int]
        Number of edges of each Θ-class.
    vc_dimension : int
        VC-dimension of the vertex labels.
    membership : MembershipFlags
        Membership in F(Q_3), F(Q_3, SK_4) and F(Q_3, C_6).
    cycle_lengths : list[int]
        Lengths of the convex cycles.
    subdivisions : list[FullSubdivision]
        Maximal full subdivisions SK_n with n ≥ 4.
    disk_boundary : tuple[Label, ...] | None
        Boundary of the graph when it is a disk.
    hyperplane_vc : list[int]
        VC-dimension of the hyperplane of each class.
    ample : AmpleReport
        Sizes of the family and its shattered and strongly shattered complexes.
    """

    n: int
    m: int
    edges: int
    class_sizes: list[int]
    vc_dimension: int
    membership: MembershipFlags
    cycle_lengths: list[int]
    subdivisions: list[FullSubdivision]
    disk_boundary: tuple[Label, ...] | None
    hyperplane_vc: list[int]
    ample: AmpleReport

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "edges": self.edges,
            "class_sizes": self.class_sizes,
            "vc_dimension": self.vc_dimension,
            "membership": self.membership.to_dict(),
            "convex_cycle_lengths": self.cycle_lengths,
            "full_subdivisions": [h.to_dict() for h in self.subdivisions],
            "disk_boundary": list(self.disk_boundary) if self.disk_boundary is not None else None,
            "hyperplane_vc": self.hyperplane_vc,
            "ample": self.ample.to_dict(),
        }

    def summary_lines(self) -> list[str]:
        flags = ", ".join(
            f"{name}={'-' if value is None else str(value).lower()}"
            for name, value in self.membership.to_dict().items()
        )
        lines = [
            f"vertices: {self.n}, edges: {self.edges}, Θ-classes: {self.m}",
            f"class sizes: {' '.join(str(size) for size in self.class_sizes)}",
            f"VC-dimension: {self.vc_dimension}",
            f"membership: {flags}",
            f"convex cycles: {len(self.cycle_lengths)} (lengths {sorted(set(self.cycle_lengths))})",
            f"ample: {str(self.ample.ample).lower()} "
            f"({self.ample.strongly_shattered} <= {self.ample.size} <= {self.ample.shattered})",
            f"hyperplane VC profile: {self.hyperplane_vc}",
        ]
        if self.disk_boundary is not None:
            lines.append(f"disk with boundary of length {len(self.disk_boundary)}")
        for h in self.subdivisions:
            originals = " ".join(format_set(o) for o in h.originals)
            lines.append(
                f"SK_{h.n} on {originals}: convex={str(h.convex).lower()} gated={str(h.gated).lower()} "
                f"extends_to_star={str(h.extends_to_star).lower()}"
            )
        return lines


def analyze(graph: CubeGraph) -> AnalysisReport:
    profile = []
    for i in range(graph.m):
        family = hyperplane(graph, i).family
        profile.append(vc_dimension(family))
    disk = is_disk(graph)
    return AnalysisReport(
        n=graph.n,
        m=graph.m,
        edges=len(graph.edges()),
        class_sizes=[len(theta.edges) for theta in graph.theta_classes()],
        vc_dimension=vc_dimension(graph),
        membership=membership(graph),
        cycle_lengths=[c.length for c in convex_cycles(graph)],
        subdivisions=full_subdivisions(graph),
        disk_boundary=disk.boundary if disk is not None else None,
        hyperplane_vc=profile,
        ample=ample_report(graph),
    )


CONDITIONS = {
    "i": "VC-dimension at most 2",
    "ii": "carriers are two-dimensional partial cubes",
    "iii": "hyperplanes are virtual isometric trees",
    "iv": "expansion covers have VC(V0) <= 1",
    "v": "2d-amalgam of gated cycles and full subdivisions",
    "vi": "extends to a two-dimensional ample partial cube",
    "vii": "gated hulls of isometric cycles are disks or full subdivisions",
}


@dataclass(slots=True)
class CharacterizationReport:
    """
    The equivalent characterizations of two-dimensional partial cubes, evaluated separately.

    Conditions (i) to (vi) are equivalent; (vii) follows from them.
    """

    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        first = self.conditions["i"]
        equivalent = all(self.conditions[key] == first for key in ("ii", "iii", "iv", "v", "vi"))
        return equivalent and (not first or self.conditions["vii"])

    def to_dict(self) -> dict[str, Any]:
        return {"conditions": dict(self.conditions), "consistent": self.consistent}

    def summary_lines(self) -> list[str]:
        lines = [
            f"({key}) {CONDITIONS[key]}: {str(value).lower()}" for key, value in self.conditions.items()
        ]
        lines.append(f"consistent: {str(self.consistent).lower()}")
        return lines


def _carriers_two_dimensional(graph: CubeGraph) -> bool:
    for i in range(graph.m):
        try:
            part = from_labels(graph.m, carrier(graph, i))
        except PcubeError:
            return False
        if not is_two_dimensional(part):
            return False
    return True


def _expansion_covers_thin(graph: CubeGraph) -> bool:
    for step in expansion_sequence(graph):
        if vc_dimension(SetFamily(step.graph.m, step.cover.v0)) > 1:
            return False
    return True


def _amalgam_decomposable(graph: CubeGraph) -> bool:
    try:
        tree = amalgam_decompose(graph, check_dimension=False)
        return validate_amalgam_tree(graph, tree)
    except PcubeError:
        return False


def _ample_extension(graph: CubeGraph) -> bool:
    try:
        ample_completion(graph)
    except PcubeError:
        return False
    return True


def _isometric_cycle_hulls(graph: CubeGraph) -> bool:
    subdivisions = {h.vertices for h in full_subdivisions(graph, n_min=3)}
    for cycle in isometric_cycles(graph):
        try:
            hull = gated_hull(graph, cycle.vertices)
        except PcubeError:
            return False
        if hull not in subdivisions and is_disk(graph, hull) is None:
            return False
    return True


def characterize(graph: CubeGraph) -> CharacterizationReport:
    report = CharacterizationReport()
    report.conditions = {
        "i": is_two_dimensional(graph),
        "ii": _carriers_two_dimensional(graph),
        "iii": all(is_virtual_isometric_tree(hyperplane(graph, i).family) for i in range(graph.m)),
        "iv": _expansion_covers_thin(graph),
        "v": _amalgam_decomposable(graph),
        "vi": _ample_extension(graph),
        "vii": _isometric_cycle_hulls(graph),
    }
    logger.debug(f"Characterization of a graph with {graph.n} vertices: {report.conditions}")
    return report
