from __future__ import annotations

from pathlib import Path
from typing import Annotated

from sayer import Option, group

from pcube import generators
from pcube.cells.wiring import WiringDiagram, disk_from_wiring
from pcube.cli.inspect.app import emit_graph, exit_codes
from pcube.exceptions import BadParams

generate = group(
    name="generate",
    help="Print standard partial cubes as graph documents",
)


@generate.command()
async def qm(
    m: Annotated[int, Option(3, help="Dimension of the hypercube")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    The hypercube Q_m.
    """
    with exit_codes():
        graph = generators.hypercube(m)
    emit_graph(graph, output, dot)


@generate.command()
async def cycle(
    length: Annotated[int, Option(6, help="Even cycle length 2k, at least 4")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    The even cycle C_2k.
    """
    with exit_codes():
        if length % 2:
            raise BadParams("Partial cube cycles have even length")
        graph = generators.even_cycle(length // 2)
    emit_graph(graph, output, dot)


@generate.command()
async def skn(
    n: Annotated[int, Option(4, help="Number of original vertices, at least 3")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    The full subdivision SK_n of the complete graph K_n.
    """
    with exit_codes():
        graph = generators.full_subdivision(n)
    emit_graph(graph, output, dot)


@generate.command(name="skn-star")
async def skn_star(
    n: Annotated[int, Option(4, help="Number of original vertices, at least 3")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    SK*_n: the full subdivision SK_n with the empty set added.
    """
    with exit_codes():
        graph = generators.full_subdivision_star(n)
    emit_graph(graph, output, dot)


@generate.command()
async def qmm(
    m: Annotated[int, Option(4, help="Dimension of the hypercube, at least 3")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    Q_m^--: the hypercube with two antipodal vertices removed.
    """
    with exit_codes():
        graph = generators.q_minus_minus(m)
    emit_graph(graph, output, dot)


@generate.command(name="q3-minus")
async def q3_minus(
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    Q_3^-: the cube with one vertex removed.
    """
    emit_graph(generators.q_three_minus(), output, dot)


@generate.command()
async def xfamily(
    m: Annotated[int, Option(4, help="Dimension of the hypercube, at least 4")],
    i: Annotated[int, Option(1, help="Index between 1 and m + 1")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    X_m^i: the hypercube minus the labels of the X-family recursion.

    X_m^{m+1} drops ∅ and (1,…,1,0); each smaller index drops one more vertex next to e_m,
    and X_4^1 is SK_4.
    """
    with exit_codes():
        graph = generators.x_family(m, i)
    emit_graph(graph, output, dot)


@generate.command()
async def wiring(
    path: Path,
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    The disk described by a wiring diagram file.

    The file starts with `lines: L` followed by one column per line (or `|`-separated), each
    column listing the swapped positions `p` or the reversed blocks `p-q`.
    """
    with exit_codes():
        diagram = WiringDiagram.parse(path.read_text(encoding="utf-8"))
        graph = disk_from_wiring(diagram)
    emit_graph(graph, output, dot)


@generate.command(name="random-wiring")
async def random_wiring(
    lines: Annotated[int, Option(4, help="Number of pseudolines")],
    seed: Annotated[int | None, Option(None, help="Random seed")],
    output: Annotated[Path | None, Option(None, help="Write the document to this file")],
    dot: Annotated[bool, Option(False, help="Print DOT instead of a graph document")],
) -> None:
    """
    The disk of a random simple wiring diagram.
    """
    with exit_codes():
        graph = generators.random_wiring(lines, seed)
    emit_graph(graph, output, dot)
