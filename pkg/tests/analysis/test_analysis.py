import pytest

from pcube.analysis import CONDITIONS, analyze, characterize


def test_analyze_hexagon(c6):
    report = analyze(c6)

    assert (report.n, report.m, report.edges) == (6, 3, 6)
    assert report.class_sizes == [2, 2, 2]
    assert report.cycle_lengths == [6]
    assert report.subdivisions == []
    assert len(report.disk_boundary) == 6
    assert report.hyperplane_vc == [1, 1, 1]
    assert not report.ample.ample


def test_analyze_full_subdivision(sk4):
    report = analyze(sk4)

    assert report.edges == 12
    assert report.class_sizes == [3, 3, 3, 3]
    assert report.cycle_lengths == [6, 6, 6, 6]
    assert [h.n for h in report.subdivisions] == [4]
    assert report.disk_boundary is None
    assert report.membership.com2 is False

    data = report.to_dict()
    assert data["membership"] == {"F(Q3)": True, "F(Q3,SK4)": False, "F(Q3,C6)": False}
    assert data["full_subdivisions"][0]["originals"] == [1, 2, 4, 8]


def test_analysis_summary(q3):
    lines = analyze(q3).summary_lines()

    assert lines[0] == "vertices: 8, edges: 12, Θ-classes: 3"
    assert "membership: F(Q3)=false, F(Q3,SK4)=-, F(Q3,C6)=false" in lines


@pytest.mark.parametrize("name", ["c6", "c8", "sk4", "sk4_star", "q3_minus", "domino"])
def test_two_dimensional_graphs_satisfy_every_condition(request, name):
    report = characterize(request.getfixturevalue(name))

    assert set(report.conditions) == set(CONDITIONS)
    assert all(report.conditions.values())
    assert report.consistent


def test_cube_fails_every_equivalent_condition(q3):
    report = characterize(q3)

    assert not any(report.conditions[key] for key in ("i", "ii", "iii", "iv", "v", "vi"))
    assert report.consistent
    assert report.to_dict()["consistent"] is True
    assert report.summary_lines()[-1] == "consistent: true"
