from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any

from rich.table import Table
from sayer import Option, echo, error, group, info, success
from sayer.core.console.sayer import console  # type: ignore

from pcube.analysis import analyze, characterize
from pcube.core.graph import CubeGraph
from pcube.core.recognition import Recognition
from pcube.documents import GraphDocument, load_graph, to_dot
from pcube.exceptions import (
    BudgetExceeded,
    HalfspaceNotConvex,
    HostNotTwoDimensional,
    NotBipartite,
    NotConnected,
    NotIsometric,
    NotPartialCube,
    PcubeError,
)
from pcube.serializers import serializer

EXIT_ERROR = 1
EXIT_NOT_PARTIAL_CUBE = 2
EXIT_NOT_TWO_DIMENSIONAL = 3
EXIT_BUDGET = 4

inspect = group(
    name="inspect",
    help="Recognize, analyze and export partial cubes",
)


def _witness(exc: NotPartialCube) -> str | None:
    if isinstance(exc, HalfspaceNotConvex) and exc.path:
        return f"edge {exc.edge} with shortest path {' -> '.join(str(v) for v in exc.path)} leaving W(u, v)"
    if isinstance(exc, NotBipartite) and exc.edge is not None:
        return f"odd cycle through edge {exc.edge}"
    if isinstance(exc, NotIsometric):
        u, v = exc.pair
        return f"labels {u:#b} and {v:#b}: graph distance {exc.graph_distance}, Hamming {exc.hamming_distance}"
    if isinstance(exc, NotConnected):
        return f"component of size {len(exc.component)}"
    return None


@contextmanager
def exit_codes() -> Iterator[None]:
    """
    Turns pcube errors into error messages and process exit codes.

    Exit codes: 2 for inputs that are not partial cubes, 3 for graphs that are not
    two-dimensional, 4 for exhausted search budgets and 1 for anything else.
    """
    try:
        yield
    except NotPartialCube as exc:
        error(f"Not a partial cube: {exc}")
        witness = _witness(exc)
        if witness:
            error(f"Witness: {witness}")
        raise SystemExit(EXIT_NOT_PARTIAL_CUBE) from None
    except HostNotTwoDimensional as exc:
        error(str(exc))
        raise SystemExit(EXIT_NOT_TWO_DIMENSIONAL) from None
    except BudgetExceeded as exc:
        error(f"{exc} (budget {exc.budget})")
        raise SystemExit(EXIT_BUDGET) from None
    except PcubeError as exc:
        error(str(exc))
        raise SystemExit(EXIT_ERROR) from None
    except OSError as exc:
        error(f"Cannot read input: {exc}")
        raise SystemExit(EXIT_ERROR) from None


def read_graph(path: Path) -> tuple[CubeGraph, Recognition | None]:
    """
    Loads a graph document or recognizes an edge list. Must run inside `exit_codes()`.
    """
    return load_graph(path.read_text(encoding="utf-8"))


def emit_json(data: Any) -> None:
    echo(serializer.dumps(data, indent=2))


def emit_graph(graph: CubeGraph, output: Path | None = None, dot: bool = False) -> None:
    """
    Writes the graph document (or DOT text) to `output`, or prints it.
    """
    text = to_dot(graph) if dot else GraphDocument.from_graph(graph).dumps(indent=2) + "\n"
    if output is None:
        echo(text.rstrip("\n"))
        return
    output.write_text(text, encoding="utf-8")
    success(f"Wrote {graph.n} vertices to {output}")


def show_recognition(path: Path, json: bool) -> None:
    with exit_codes():
        graph, recognition = read_graph(path)

    names = None
    if recognition is not None:
        names = {label: str(node) for node, label in recognition.labels.items()}
    document = GraphDocument.from_graph(graph, names=names)

    if json:
        emit_json(document.to_dict())
        return

    info(f"Partial cube with {graph.n} vertices and {graph.m} Θ-classes")
    table = Table(title="Labeling", header_style="bold magenta")
    table.add_column("Vertex", style="green")
    table.add_column("Label", style="cyan")
    for k, bits in enumerate(document.vertices):
        table.add_row(document.names[k] if document.names else str(k), bits)
    console.print(table)


@inspect.command()
async def recognize(
    path: Path,
    json: Annotated[bool, Option(False, help="Print the labeled graph document only")],
) -> None:
    """
    Recognize a graph as a partial cube and print its hypercube labeling.

    The input is an edge list (`u v` per line), a JSON `{"edges": [...]}` payload or a graph
    document. When recognition fails the command exits with code 2 and prints the witness: an
    odd cycle, a disconnected part or a shortest path leaving some W(u, v).
    """
    show_recognition(path, json)


@inspect.command(name="analyze")
async def analyze_graph(
    path: Path,
    json: Annotated[bool, Option(False, help="Output the report as JSON")],
) -> None:
    """
    Structural report: Θ-classes, VC-dimension, membership in F(Q_3), COM2 and the
    F(Q_3, C_6) class, convex cycles, full subdivisions, disks and the VC-dimension of every
    hyperplane.
    """
    with exit_codes():
        graph, _ = read_graph(path)
        report = analyze(graph)

    if json:
        emit_json(report.to_dict())
        return
    for line in report.summary_lines():
        info(line)


@inspect.command(name="characterize")
async def characterize_graph(
    path: Path,
    json: Annotated[bool, Option(False, help="Output the conditions as JSON")],
) -> None:
    """
    Evaluate every characterization of two-dimensional partial cubes separately.

    Exits with code 1 when the conditions disagree.
    """
    with exit_codes():
        graph, _ = read_graph(path)
        report = characterize(graph)

    if json:
        emit_json(report.to_dict())
    else:
        for line in report.summary_lines():
            info(line)
    if not report.consistent:
        error("Characterizations disagree")
        raise SystemExit(EXIT_ERROR)


@inspect.command()
async def dot(
    path: Path,
    output: Annotated[Path | None, Option(None, help="Write the DOT text to this file")],
) -> None:
    """
    Export the graph as DOT with edges colored by Θ-class.
    """
    with exit_codes():
        graph, _ = read_graph(path)
    emit_graph(graph, output, dot=True)
