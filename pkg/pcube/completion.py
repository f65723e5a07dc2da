"""
Completions of two-dimensional partial cubes.

`com_completion` adds, for every maximal convex full subdivision SK_n (n ≥ 4), the vertex
adjacent to all its originals until no convex full subdivision is left; the result is the tope
graph of a two-dimensional COM. `ample_completion` then fills every gated cycle of length at
least six by a ladder of squares until all convex cycles are squares, which yields a
two-dimensional ample partial cube. Every step is verified against the guarantees it is meant
to preserve and raises `VerificationFailed` otherwise.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from pcube.cells.cycles import Cycle, as_isometric_cycle, convex_cycles
from pcube.cells.subdivisions import FullSubdivision, as_full_subdivision, full_subdivisions
from pcube.core.graph import CubeGraph, from_labels
from pcube.core.hulls import is_convex, is_gated, is_isometric
from pcube.core.labels import Label, bit, coordinates, format_set
from pcube.exceptions import (
    ClassNotCrossing,
    CycleTooShort,
    HostNotTwoDimensional,
    NotConvex,
    NotGated,
    NotMaximal,
    NotPartialCube,
    VerificationFailed,
)
from pcube.logging import logger
from pcube.minors.families import first_shattered_triple, is_ample, sauer_shelah_bound
from pcube.minors.membership import membership


@dataclass(frozen=True, slots=True)
class OneExtension:
    subdivision: FullSubdivision
    added: tuple[Label, ...]

    @property
    def kind(self) -> str:
        return "one-extension"

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "n": self.subdivision.n, "originals": list(self.subdivision.originals), "added": list(self.added)}


@dataclass(frozen=True, slots=True)
class CycleFill:
    cycle: Cycle
    class_index: int
    added: tuple[Label, ...]

    @property
    def kind(self) -> str:
        return "cycle-fill"

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "cycle": list(self.cycle.vertices), "class": self.class_index, "added": list(self.added)}


Step = OneExtension | CycleFill


@dataclass(slots=True)
class CompletionReport:
    """
    Outcome of a completion pipeline.

    Attributes
    ----------
    input : CubeGraph
        The graph that was completed.
    output : CubeGraph
        The completed graph; the input is an isometric subgraph of it with the same labels.
    com_graph : CubeGraph
        The result of the 1-extension stage (equal to `output` for `com_completion`).
    steps : list[Step]
        The applied steps in order.
    checks : dict[str, bool]
        Final verification flags.
    """

    input: CubeGraph
    output: CubeGraph
    com_graph: CubeGraph
    steps: list[Step] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def one_extensions(self) -> int:
        return sum(1 for step in self.steps if isinstance(step, OneExtension))

    @property
    def cycle_fills(self) -> int:
        return sum(1 for step in self.steps if isinstance(step, CycleFill))

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.input.m,
            "input_size": self.input.n,
            "com_size": self.com_graph.n,
            "output_size": self.output.n,
            "steps": [step.to_dict() for step in self.steps],
            "checks": dict(self.checks),
        }

    def summary_lines(self) -> list[str]:
        lines = [
            f"input: {self.input.n} vertices, m = {self.input.m}",
            f"1-extensions: {self.one_extensions} (COM completion has {self.com_graph.n} vertices)",
        ]
        if self.output is not self.com_graph:
            lines.append(f"cycle fills: {self.cycle_fills}")
        lines.append(f"output: {self.output.n} vertices")
        for step in self.steps:
            added = ", ".join(format_set(v) for v in step.added)
            if isinstance(step, OneExtension):
                lines.append(f"  extend SK_{step.subdivision.n}: add {added}")
            else:
                lines.append(f"  fill C_{step.cycle.length} along class {step.class_index + 1}: add {added}")
        lines.extend(f"check {name}: {'ok' if passed else 'FAILED'}" for name, passed in self.checks.items())
        return lines


def _require_two_dimensional(graph: CubeGraph) -> None:
    triple = first_shattered_triple(graph)
    if triple is not None:
        raise HostNotTwoDimensional(
            f"Coordinates {format_set(triple)} are shattered", shattered=triple
        )


def _extend(graph: CubeGraph, labels: Iterable[Label]) -> CubeGraph:
    try:
        result = from_labels(graph.m, graph.vertex_set | set(labels))
    except NotPartialCube as exc:
        raise VerificationFailed("result is a partial cube") from exc
    if result.m != graph.m:
        raise VerificationFailed("labels of the input are preserved")
    return result


def _convex_subdivisions(graph: CubeGraph, n_min: int) -> list[FullSubdivision]:
    return [h for h in full_subdivisions(graph, n_min=n_min) if h.convex]


def _long_convex_cycles(graph: CubeGraph) -> list[Cycle]:
    return [c for c in convex_cycles(graph) if c.length >= 6]


def one_extension(graph: CubeGraph, subdivision: FullSubdivision) -> CubeGraph:
    """
    Adds to `graph` the vertex adjacent to all originals of a maximal convex SK_n, n ≥ 4.

    Raises
    ------
    HostNotTwoDimensional
        If the graph shatters three coordinates.
    NotMaximal
        If the subdivision is not among the maximal full subdivisions with n ≥ 4.
    NotConvex
        If it is not convex.
    VerificationFailed
        If the extension is not a two-dimensional partial cube containing `graph` isometrically,
        or creates a convex full subdivision or a long convex cycle `graph` does not have.
    """
    _require_two_dimensional(graph)
    maximal = {h.originals: h for h in full_subdivisions(graph)}
    current = maximal.get(tuple(sorted(subdivision.originals)))
    if current is None:
        raise NotMaximal(f"SK_{subdivision.n} on {list(subdivision.originals)} is not a maximal full subdivision")
    if not current.convex:
        raise NotConvex(f"SK_{current.n} on {list(current.originals)} is not convex")

    result = _extend(graph, [current.center])
    if first_shattered_triple(result) is not None:
        raise VerificationFailed("1-extension stays two-dimensional")
    if not is_isometric(result, graph.vertices):
        raise VerificationFailed("input is isometric in the 1-extension")
    for h in _convex_subdivisions(result, n_min=3):
        if not (h.vertices <= graph.vertex_set and is_convex(graph, h.vertices)):
            raise VerificationFailed("1-extension creates no convex full subdivision")
    old_cycles = {c.vertex_set for c in _long_convex_cycles(graph)}
    if any(c.vertex_set not in old_cycles for c in _long_convex_cycles(result)):
        raise VerificationFailed("1-extension creates no long convex cycle")

    logger.debug(f"1-extension of SK_{current.n} adds {format_set(current.center)}")
    return result


def com_completion(graph: CubeGraph) -> CompletionReport:
    """
    Applies 1-extensions until no convex full subdivision SK_n (n ≥ 4) is left.

    The subdivision with the smallest sorted vertex labels is extended first.

    Raises
    ------
    HostNotTwoDimensional
        If the graph shatters three coordinates.
    VerificationFailed
        If the completed graph fails one of its post-checks.
    """
    _require_two_dimensional(graph)
    bound = sauer_shelah_bound(graph.m, 2)
    current = graph
    steps: list[Step] = []
    while True:
        candidates = _convex_subdivisions(current, n_min=4)
        if not candidates:
            break
        chosen = candidates[0]
        current = one_extension(current, chosen)
        steps.append(OneExtension(subdivision=chosen, added=(chosen.center,)))
        if len(steps) > bound or current.n > bound:
            raise VerificationFailed("1-extension steps stay within the Sauer-Shelah bound")

    flags = membership(current)
    report = CompletionReport(input=graph, output=current, com_graph=current, steps=steps)
    report.checks = {
        "input_isometric": is_isometric(current, graph.vertices),
        "two_dimensional": flags.two_dimensional,
        "com2": bool(flags.com2),
        "step_bound": len(steps) <= bound,
    }
    if not all(report.checks.values()):
        failed = ", ".join(name for name, passed in report.checks.items() if not passed)
        raise VerificationFailed(f"COM completion ({failed})")
    logger.info(f"COM completion: {graph.n} -> {current.n} vertices in {len(steps)} steps")
    return report


def _number_from_class(cycle: Cycle, j: int) -> list[Label]:
    """
    Cycle vertices v_1, …, v_2k with v_2k v_1 and v_k v_{k+1} in class `j`.
    """
    order = list(cycle.vertices)
    size = len(order)
    p = next(k for k in range(size) if order[k] ^ order[(k + 1) % size] == bit(j))
    return [order[(p + i) % size] for i in range(1, size + 1)]


def cycle_fill_step(graph: CubeGraph, cycle: Cycle | Iterable[Label], j: int) -> CubeGraph:
    """
    Glues a ladder of squares along class `j` inside a gated cycle of length 2k ≥ 6.

    With the cycle numbered v_1, …, v_2k so that v_2k v_1 and v_k v_{k+1} cross class `j`,
    the vertices v'_i = v_i ⊕ j are added for i = 2, …, k − 1. The remaining part
    v_2k, v'_2, …, v'_{k−1}, v_{k+1}, …, v_{2k−1} is a gated cycle of length 2k − 2.

    Raises
    ------
    NotAnIsometricCycle
        If `cycle` is not an isometric cycle of `graph`.
    CycleTooShort
        If the cycle has fewer than six vertices.
    NotGated
        If the cycle is not gated.
    ClassNotCrossing
        If class `j` does not cross the cycle.
    VerificationFailed
        If the result violates one of the preserved properties.
    """
    cycle = as_isometric_cycle(graph, cycle)
    if cycle.length < 6:
        raise CycleTooShort(f"Cycle of length {cycle.length} cannot be filled")
    if not is_gated(graph, cycle.vertices):
        raise NotGated("Only gated cycles can be filled")
    if not cycle.classes >> j & 1:
        raise ClassNotCrossing(f"Class {j} does not cross the cycle")

    k = cycle.length // 2
    v = _number_from_class(cycle, j)
    # v[i - 1] is v_i
    added = tuple(v[i - 1] ^ bit(j) for i in range(2, k))
    if any(label in graph for label in added):
        raise VerificationFailed("filled vertices are new")
    result = _extend(graph, added)

    if not is_isometric(result, graph.vertices):
        raise VerificationFailed("input is isometric in the filled graph")
    shrunk = [v[-1], *added, *v[k : 2 * k - 1]]
    if not is_gated(result, shrunk):
        raise VerificationFailed("remaining cycle is gated")
    if first_shattered_triple(graph) is None and first_shattered_triple(result) is not None:
        raise VerificationFailed("filling stays two-dimensional")
    if not _convex_subdivisions(graph, n_min=4) and _convex_subdivisions(result, n_min=4):
        raise VerificationFailed("filling creates no convex full subdivision")

    logger.debug(f"Filled C_{cycle.length} along class {j}, added {len(added)} vertices")
    return result


def _next_fillable(graph: CubeGraph) -> Cycle | None:
    for cycle in _long_convex_cycles(graph):
        if is_gated(graph, cycle.vertices):
            return cycle
    return None


def ample_completion(graph: CubeGraph) -> CompletionReport:
    """
    COM completion followed by cycle filling until every convex cycle is a square.

    The shortest gated long convex cycle with the smallest labels is filled first, along its
    lowest crossing class.

    Raises
    ------
    HostNotTwoDimensional
        If the graph shatters three coordinates.
    """
    report = com_completion(graph)
    current = report.com_graph
    steps = list(report.steps)
    while (cycle := _next_fillable(current)) is not None:
        j = next(coordinates(cycle.classes))
        before = current.vertex_set
        current = cycle_fill_step(current, cycle, j)
        steps.append(CycleFill(cycle=cycle, class_index=j, added=tuple(sorted(current.vertex_set - before))))

    result = CompletionReport(input=graph, output=current, com_graph=report.com_graph, steps=steps)
    result.checks = {
        "input_isometric": is_isometric(current, graph.vertices),
        "com_isometric": is_isometric(current, report.com_graph.vertices),
        "two_dimensional": first_shattered_triple(current) is None,
        "squares_only": not _long_convex_cycles(current),
        "ample": is_ample(current),
        "step_bound": report.checks["step_bound"],
    }
    if not all(result.checks.values()):
        failed = ", ".join(name for name, passed in result.checks.items() if not passed)
        raise VerificationFailed(f"ample completion ({failed})")
    logger.info(f"Ample completion: {graph.n} -> {current.n} vertices in {len(steps)} steps")
    return result
