import json

import pytest

from pcube.documents import GraphDocument

pytestmark = pytest.mark.anyio


def test_ample_completion_of_a_hexagon(cli, write_graph, c6):
    result = cli.invoke(f"complete ample {write_graph(c6)} --json")

    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["report"]["output_size"] == 7
    assert len(data["document"]["vertices"]) == 7
    assert all(data["report"]["checks"].values())


def test_com_completion_to_file(cli, write_graph, tmp_path, sk4):
    target = tmp_path / "star.json"

    result = cli.invoke(f"complete com {write_graph(sk4)} --output {target}")

    assert result.exit_code == 0
    assert GraphDocument.loads(target.read_text(encoding="utf-8")).to_graph().n == 11


def test_completion_of_a_cube_exits_with_three(cli, write_graph, q3):
    result = cli.invoke(f"complete com {write_graph(q3)}")

    assert result.exit_code == 3
