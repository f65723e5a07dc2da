import json

import pytest

from pcube import generators
from pcube.documents import GraphDocument

pytestmark = pytest.mark.anyio


def test_generate_qmm(cli):
    result = cli.invoke("generate qmm --m 4")

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["format"] == "pcube/1"
    assert data["m"] == 4
    assert len(data["vertices"]) == 14


def test_generate_cycle(cli):
    result = cli.invoke("generate cycle --length 8")

    assert result.exit_code == 0
    assert len(json.loads(result.output)["vertices"]) == 8


def test_generate_odd_cycle_fails(cli):
    result = cli.invoke("generate cycle --length 7")

    assert result.exit_code == 1


def test_generate_x_family_member(cli):
    result = cli.invoke("generate xfamily --m 4 --i 1")

    assert result.exit_code == 0
    assert len(json.loads(result.output)["vertices"]) == 10


def test_generate_to_file(cli, tmp_path):
    target = tmp_path / "cube.json"

    result = cli.invoke(f"generate qm --m 3 --output {target}")

    assert result.exit_code == 0
    document = GraphDocument.loads(target.read_text(encoding="utf-8"))
    assert document.to_graph() == generators.hypercube(3)


def test_generate_dot(cli):
    result = cli.invoke("generate q3-minus --dot")

    assert result.exit_code == 0
    assert result.output.startswith("graph G {")
    assert result.output.count(" -- ") == 9


def test_generate_from_wiring_diagram(cli, tmp_path):
    diagram = tmp_path / "three.txt"
    diagram.write_text("lines: 3\n1|2|1\n", encoding="utf-8")

    result = cli.invoke(f"generate wiring {diagram}")

    assert result.exit_code == 0
    assert len(json.loads(result.output)["vertices"]) == 7


def test_generate_random_wiring(cli):
    result = cli.invoke("generate random-wiring --lines 4 --seed 3")

    assert result.exit_code == 0
    assert len(json.loads(result.output)["vertices"]) == 11
