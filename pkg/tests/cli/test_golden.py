import json
from pathlib import Path

import pytest

pytestmark = pytest.mark.anyio

GOLDEN = Path(__file__).parent / "golden"


def golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "command, expected",
    [
        ("generate cycle --length 6", "cycle6.json"),
        ("generate skn --n 4", "skn4.json"),
        ("generate qmm --m 4", "qmm4.json"),
        ("generate qm --m 2 --dot", "q2.dot"),
    ],
)
def test_generate_matches_golden(cli, tmp_path, command, expected):
    target = tmp_path / expected

    result = cli.invoke(f"{command} --output {target}")

    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8") == golden(expected)


@pytest.mark.parametrize(
    "command, graph, expected",
    [
        ("complete com", "sk4", "sk4_com.json"),
        ("complete ample", "c6", "c6_ample.json"),
        ("inspect dot", "c6", "c6.dot"),
    ],
)
def test_graph_commands_match_golden(cli, write_graph, tmp_path, request, command, graph, expected):
    source = write_graph(request.getfixturevalue(graph))
    target = tmp_path / expected

    result = cli.invoke(f"{command} {source} --output {target}")

    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8") == golden(expected)


@pytest.mark.parametrize("command", ["recognize", "inspect recognize"])
def test_recognize_matches_golden(cli, command):
    result = cli.invoke(f"{command} {GOLDEN / 'c6.edges'} --json")

    assert result.exit_code == 0
    assert json.loads(result.output) == json.loads(golden("c6_recognized.json"))
