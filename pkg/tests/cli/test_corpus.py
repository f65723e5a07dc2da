import json

import pytest

pytestmark = pytest.mark.anyio


def test_build_and_show(cli, tmp_path):
    built = cli.invoke(f"corpus build --m 2 --cache-dir {tmp_path}")

    assert built.exit_code == 0
    assert "4 partial cubes in Q_2" in built.output

    shown = cli.invoke(f"corpus show --m 2 --cache-dir {tmp_path} --json")

    assert shown.exit_code == 0
    data = json.loads(shown.output)
    assert data["n_max"] == 4
    assert [len(g["vertices"]) for g in data["graphs"]] == [1, 2, 3, 4]


def test_show_without_a_cache(cli, tmp_path):
    result = cli.invoke(f"corpus show --m 2 --cache-dir {tmp_path}")

    assert result.exit_code == 1
