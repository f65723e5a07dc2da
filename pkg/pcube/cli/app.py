from __future__ import annotations

from pathlib import Path
from typing import Annotated

from sayer import Option, Sayer

from pcube import __version__
from pcube.cli.complete.app import complete
from pcube.cli.corpus.app import corpus
from pcube.cli.generate.app import generate
from pcube.cli.inspect.app import inspect, show_recognition

help_text = """
pcube command line tool for two-dimensional partial cubes

How to run pcube: `pcube <GROUP> <COMMAND>`.

    Example: `pcube inspect analyze graph.json`
"""

app = Sayer(
    name="pcube",
    help=help_text,
    add_version_option=True,
    version=__version__,
)


@app.callback(invoke_without_command=True)
def callback() -> None: ...


@app.command(name="recognize")
async def recognize(
    path: Path,
    json: Annotated[bool, Option(False, help="Print the labeled graph document only")],
) -> None:
    """
    Shortcut for `pcube inspect recognize`.
    """
    show_recognition(path, json)


app.add_command(inspect)
app.add_command(complete)
app.add_command(generate)
app.add_command(corpus)
