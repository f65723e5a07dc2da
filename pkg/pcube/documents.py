"""
Input and output formats.

- Graph documents: `{"format": "pcube/1", "m": 3, "vertices": ["000", "100", …]}` with an
  optional `"names"` list parallel to `"vertices"`. Bitstrings put coordinate 0 first.
- Abstract graphs for recognition: a JSON object with an `"edges"` list of pairs, or an edge
  list with one `u v` pair per line (`#` starts a comment).
- DOT export with edges colored by Θ-class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import networkx as nx

from pcube.core.graph import CubeGraph, from_labels
from pcube.core.labels import from_bitstring, to_bitstring
from pcube.core.recognition import Recognition, recognize
from pcube.exceptions import DocumentError
from pcube.serializers import serializer

FORMAT = "pcube/1"

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
    "#bcbd22",
    "#7f7f7f",
)


@dataclass(frozen=True, slots=True)
class GraphDocument:
    """
    Attributes
    ----------
    m : int
        Number of coordinates.
    vertices : tuple[str, ...]
        One bitstring of length `m` per vertex.
    names : tuple[str, ...] | None
        Optional vertex names, parallel to `vertices`.
    """

    m: int
    vertices: tuple[str, ...]
    names: tuple[str, ...] | None = None

    @classmethod
    def from_graph(cls, graph: CubeGraph, names: dict[int, str] | None = None) -> GraphDocument:
        vertex_names = tuple(names[v] for v in graph.vertices) if names else None
        return cls(m=graph.m, vertices=tuple(graph.bitstrings()), names=vertex_names)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GraphDocument:
        if data.get("format") != FORMAT:
            raise DocumentError(f"Unsupported document format {data.get('format')!r}")
        try:
            m = int(data["m"])
            vertices = tuple(str(v) for v in data["vertices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"Malformed graph document: {exc}") from exc
        if any(len(v) != m for v in vertices):
            raise DocumentError(f"Every bitstring must have length {m}")
        names = data.get("names")
        if names is not None and len(names) != len(vertices):
            raise DocumentError("'names' must be parallel to 'vertices'")
        return cls(m=m, vertices=vertices, names=tuple(str(n) for n in names) if names is not None else None)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"format": FORMAT, "m": self.m, "vertices": list(self.vertices)}
        if self.names is not None:
            data["names"] = list(self.names)
        return data

    def to_graph(self) -> CubeGraph:
        try:
            labels = [from_bitstring(v) for v in self.vertices]
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        return from_labels(self.m, labels)

    def dumps(self, indent: int | None = None) -> str:
        return serializer.dumps(self.to_dict(), indent=indent)

    @classmethod
    def loads(cls, text: str) -> GraphDocument:
        try:
            data = serializer.loads(text)
        except ValueError as exc:
            raise DocumentError(f"Invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise DocumentError("A graph document must be a JSON object")
        return cls.from_dict(data)


def _vertex_id(token: str) -> int | str:
    return int(token) if token.lstrip("-").isdigit() else token


def read_edge_list(text: str) -> nx.Graph:
    """
    Parses `u v` lines into an abstract graph; a line with a single token adds an isolated vertex.
    """
    graph = nx.Graph()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            graph.add_node(_vertex_id(tokens[0]))
        elif len(tokens) == 2:
            graph.add_edge(_vertex_id(tokens[0]), _vertex_id(tokens[1]))
        else:
            raise DocumentError(f"Line {number}: expected 'u v', got {raw!r}")
    return graph


def read_input(text: str) -> GraphDocument | nx.Graph:
    """
    A graph document, or the abstract graph of an `"edges"` payload or edge list.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = serializer.loads(stripped)
        except ValueError as exc:
            raise DocumentError(f"Invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise DocumentError("Expected a JSON object")
        if "edges" in data and "vertices" not in data:
            graph = nx.Graph()
            graph.add_nodes_from(data.get("nodes", []))
            try:
                graph.add_edges_from((u, v) for u, v in data["edges"])
            except (TypeError, ValueError) as exc:
                raise DocumentError(f"Malformed edges payload: {exc}") from exc
            return graph
        return GraphDocument.from_dict(data)
    return read_edge_list(text)


def load_graph(text: str) -> tuple[CubeGraph, Recognition | None]:
    """
    The partial cube described by `text`, with the recognition result for abstract inputs.

    Raises
    ------
    DocumentError
        If the text cannot be parsed.
    NotPartialCube
        If the graph is not a partial cube.
    """
    parsed = read_input(text)
    if isinstance(parsed, GraphDocument):
        return parsed.to_graph(), None
    recognition = recognize(parsed)
    return recognition.graph, recognition


def to_dot(graph: CubeGraph, name: str = "G") -> str:
    """
    DOT text with bitstring node names and edges colored by Θ-class, cycling the palette.
    """
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in graph.vertices:
        lines.append(f'  "{to_bitstring(v, graph.m)}";')
    for u, v in graph.edges():
        i = (u ^ v).bit_length() - 1
        color = PALETTE[i % len(PALETTE)]
        lines.append(
            f'  "{to_bitstring(u, graph.m)}" -- "{to_bitstring(v, graph.m)}" [color="{color}", label="{i + 1}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
