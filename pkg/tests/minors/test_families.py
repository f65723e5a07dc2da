import pytest

from pcube import generators
from pcube.minors.families import (
    SetFamily,
    ample_report,
    first_shattered_triple,
    is_ample,
    maximal_shattered_sets,
    sauer_shelah_bound,
    shattered,
    shattered_sets,
    strongly_shattered,
    strongly_shattered_sets,
    vc_dimension,
)
from pcube.minors.membership import membership


def test_vc_dimension_of_small_graphs(q3, c6, sk4, q3_minus):
    assert vc_dimension(q3) == 3
    assert vc_dimension(c6) == 2
    assert vc_dimension(sk4) == 2
    assert vc_dimension(q3_minus) == 2


def test_shattered_and_strongly_shattered_sets_of_a_hexagon(c6):
    assert shattered_sets(c6) == [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110]
    assert strongly_shattered_sets(c6) == [0b000, 0b001, 0b010, 0b100]
    assert maximal_shattered_sets(c6) == [0b011, 0b101, 0b110]
    assert shattered(c6, 0b011)
    assert not strongly_shattered(c6, 0b011)


def test_sandwich_report(c6, q3_minus):
    report = ample_report(c6)

    assert (report.strongly_shattered, report.size, report.shattered) == (4, 6, 7)
    assert not report.ample
    assert is_ample(q3_minus)
    assert report.to_dict()["ample"] is False


def test_shattered_triple(q3, q3_minus):
    assert first_shattered_triple(q3) == 0b111
    assert first_shattered_triple(q3_minus) is None


def test_set_family_traces():
    family = SetFamily.of(3, [0b000, 0b011, 0b101])

    assert family.trace(0b001) == frozenset({0, 1})
    assert vc_dimension(family) == 1
    with pytest.raises(ValueError):
        vc_dimension(SetFamily.of(2, []))


def test_sauer_shelah_bound():
    assert sauer_shelah_bound(4, 2) == 11
    assert sauer_shelah_bound(3, 3) == 8


@pytest.mark.parametrize(
    "name,expected",
    [
        ("q3", (False, None, False)),
        ("c6", (True, True, False)),
        ("sk4", (True, False, False)),
        ("q3_minus", (True, True, True)),
    ],
)
def test_membership_flags(request, name, expected):
    flags = membership(request.getfixturevalue(name))

    assert (flags.two_dimensional, flags.com2, flags.ample2) == expected


def test_vc_dimension_of_standard_graphs():
    assert [vc_dimension(generators.hypercube(d)) for d in range(5)] == [0, 1, 2, 3, 4]
    for n in (4, 5, 6):
        assert vc_dimension(generators.full_subdivision(n)) == 2
        assert vc_dimension(generators.full_subdivision_star(n)) == 2
