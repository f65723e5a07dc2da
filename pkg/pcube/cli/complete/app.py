from __future__ import annotations

from pathlib import Path
from typing import Annotated

from sayer import Option, group, info

from pcube.cli.inspect.app import emit_graph, emit_json, exit_codes, read_graph
from pcube.completion import CompletionReport, ample_completion, com_completion
from pcube.documents import GraphDocument

help = """
Completion of two-dimensional partial cubes.

**Extend a graph of F(Q_3) to a COM or an ample partial cube of VC-dimension 2**

Both commands leave the labels of the input untouched: the input is an isometric subgraph of
the printed result.
"""

complete = group(
    name="complete",
    help=help,
)


def _report(report: CompletionReport, output: Path | None, json: bool) -> None:
    if json:
        emit_json({"document": GraphDocument.from_graph(report.output).to_dict(), "report": report.to_dict()})
        if output is not None:
            output.write_text(GraphDocument.from_graph(report.output).dumps(indent=2) + "\n", encoding="utf-8")
    else:
        for line in report.summary_lines():
            info(line)
        emit_graph(report.output, output)


@complete.command()
async def com(
    path: Path,
    output: Annotated[Path | None, Option(None, help="Write the completed graph document here")],
    json: Annotated[bool, Option(False, help="Print the document and report as JSON")],
) -> None:
    """
    Apply 1-extensions until no convex full subdivision SK_n (n ≥ 4) is left.

    The result is a COM of VC-dimension 2 whose convex cycles are gated. Exits with code 3
    when the input has VC-dimension 3 or more.
    """
    with exit_codes():
        graph, _ = read_graph(path)
        report = com_completion(graph)
    _report(report, output, json)


@complete.command()
async def ample(
    path: Path,
    output: Annotated[Path | None, Option(None, help="Write the completed graph document here")],
    json: Annotated[bool, Option(False, help="Print the document and report as JSON")],
) -> None:
    """
    Complete to a COM, then fill every convex cycle longer than a square.

    The result is an ample partial cube of VC-dimension 2. Exits with code 3 when the input
    has VC-dimension 3 or more.
    """
    with exit_codes():
        graph, _ = read_graph(path)
        report = ample_completion(graph)
    _report(report, output, json)
