import os

# Mirrors [tool.hatch.envs.hatch-test.env-vars] so plain `pytest` uses the test settings.
os.environ.setdefault("PCUBE_SETTINGS_MODULE", "tests.settings.TestSettings")

import re

import pytest
from sayer.testing import SayerTestClient

from pcube import generators
from pcube.cli.app import app
from pcube.core.graph import CubeGraph, from_labels
from pcube.documents import GraphDocument
from pcube.minors.families import is_two_dimensional
from pcube.oracle.corpus import Corpus, enumerate_partial_cubes, sample_partial_cubes


def parse_cli_output(output_string):
    """
    Parses a two-column CLI table with Unicode borders into a dictionary.
    """
    data = {}
    for line in output_string.splitlines():
        if re.match(r"^[─-╿]+$", line):
            continue
        parts = re.split(r"[│┃]", line)
        if len(parts) >= 3:
            key = parts[1].strip()
            val = parts[2].strip()
            if key and val and key != "Vertex":
                data[key] = val
    return data


def labels(*bitstrings: str) -> set[int]:
    """
    Labels from bitstrings written with coordinate 0 first.
    """
    return {sum(1 << i for i, ch in enumerate(bits) if ch == "1") for bits in bitstrings}


@pytest.fixture()
def cli() -> SayerTestClient:
    return SayerTestClient(app)


@pytest.fixture(scope="module")
def anyio_backend():
    return ("asyncio", {"debug": True})


@pytest.fixture()
def write_graph(tmp_path):
    def write(graph: CubeGraph, name: str = "graph.json"):
        path = tmp_path / name
        path.write_text(GraphDocument.from_graph(graph).dumps(indent=2), encoding="utf-8")
        return path

    return write


@pytest.fixture()
def q3() -> CubeGraph:
    return generators.hypercube(3)


@pytest.fixture()
def c6() -> CubeGraph:
    return generators.even_cycle(3)


@pytest.fixture()
def c8() -> CubeGraph:
    return generators.even_cycle(4)


@pytest.fixture()
def sk4() -> CubeGraph:
    return generators.full_subdivision(4)


@pytest.fixture()
def sk4_star() -> CubeGraph:
    return generators.full_subdivision_star(4)


@pytest.fixture()
def q3_minus() -> CubeGraph:
    return generators.q_three_minus()


@pytest.fixture()
def domino() -> CubeGraph:
    """
    Two squares sharing an edge.
    """
    return from_labels(3, labels("000", "100", "010", "110", "001", "101"))


@pytest.fixture(scope="session")
def corpus3() -> Corpus:
    return enumerate_partial_cubes(3)


@pytest.fixture()
def glued_sk4() -> CubeGraph:
    """
    Two copies of SK_4 sharing the edge 1-3; the second copy has center 17.
    """
    first = {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100}
    second = {1, 3, 19, 33, 49, 51, 65, 81, 83, 113}
    return from_labels(7, first | second)


@pytest.fixture(scope="session")
def corpus4() -> Corpus:
    return enumerate_partial_cubes(4)


@pytest.fixture(scope="session")
def sampled4() -> Corpus:
    return sample_partial_cubes(4, 40, seed=3)


@pytest.fixture(scope="session")
def planar4(corpus4, sampled4) -> list[CubeGraph]:
    """
    The two-dimensional members of the exhaustive and the sampled Q_4 corpora.
    """
    return [graph for graph in (*corpus4, *sampled4) if is_two_dimensional(graph)]
