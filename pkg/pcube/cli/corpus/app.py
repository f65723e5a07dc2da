from __future__ import annotations

from pathlib import Path
from typing import Annotated

from rich.table import Table
from sayer import Option, error, group, info, success
from sayer.core.console.sayer import console  # type: ignore

from pcube.cli.inspect.app import EXIT_ERROR, emit_json, exit_codes
from pcube.minors.families import vc_dimension
from pcube.oracle.cache import CorpusCache

help = """
Corpus management.

**Enumerate and inspect the small partial cubes used for cross-checking**

Corpora are stored in the cache directory (`CORPUS_CACHE_DIR`, by default
`~/.cache/pcube`), one file per dimension and size bound.
"""

corpus = group(
    name="corpus",
    help=help,
)


@corpus.command()
async def build(
    m: Annotated[int, Option(3, help="Enumerate partial cubes inside Q_m")],
    n_max: Annotated[int | None, Option(None, help="Largest number of vertices")],
    cache_dir: Annotated[Path | None, Option(None, help="Cache directory")],
) -> None:
    """
    Enumerate every partial cube of Q_m up to isomorphism and store it in the cache.

    A cached corpus for the same parameters and pcube version is reused.
    """
    cache = CorpusCache(cache_dir)
    with exit_codes():
        result = await cache.get_or_build(m, n_max)
    success(f"{len(result)} partial cubes in Q_{m} with at most {result.n_max} vertices")
    info(f"Cache: {cache.path_for(m, result.n_max)}")


@corpus.command()
async def show(
    m: Annotated[int, Option(3, help="Dimension of the corpus")],
    n_max: Annotated[int | None, Option(None, help="Largest number of vertices")],
    cache_dir: Annotated[Path | None, Option(None, help="Cache directory")],
    json: Annotated[bool, Option(False, help="Output the corpus as JSON")],
) -> None:
    """
    List a cached corpus. Exits with code 1 when it has not been built.
    """
    cache = CorpusCache(cache_dir)
    cap = (1 << m) if n_max is None else min(n_max, 1 << m)
    result = await cache.load(m, cap)
    if result is None:
        error(f"No cached corpus for m={m}, n_max={cap}; run `pcube corpus build` first")
        raise SystemExit(EXIT_ERROR)

    if json:
        emit_json(
            {
                "m": result.m,
                "n_max": result.n_max,
                "graphs": [{"m": g.m, "vertices": g.bitstrings()} for g in result.graphs],
            }
        )
        return

    table = Table(title=f"Partial cubes in Q_{m}", header_style="bold magenta")
    table.add_column("#", style="green")
    table.add_column("Vertices", style="cyan")
    table.add_column("Θ-classes", style="cyan")
    table.add_column("Edges", style="cyan")
    table.add_column("VC", style="cyan")
    for k, graph in enumerate(result.graphs):
        table.add_row(str(k), str(graph.n), str(graph.m), str(len(graph.edges())), str(vc_dimension(graph)))
    console.print(table)
