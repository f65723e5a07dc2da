import pytest

from pcube import generators
from pcube.canonical import is_isomorphic
from pcube.cells.cycles import isometric_cycles
from pcube.cells.disks import (
    CycleKind,
    affine_witness,
    antipode,
    antipodal_vertices,
    classify_isometric_cycle,
    is_antipodal,
    is_disk,
)
from pcube.core.hulls import convex_hull, is_gated
from pcube.exceptions import HostNotTwoDimensional, UnknownVertex


def test_cycles_are_disks(c8):
    disk = is_disk(c8)

    assert disk.m == 4
    assert len(disk.boundary) == 8
    assert disk.vertices == c8.vertex_set
    assert is_antipodal(c8)


def test_q3_minus_is_a_disk_bounded_by_its_hexagon(q3_minus):
    disk = is_disk(q3_minus)

    assert disk.boundary == (0b001, 0b011, 0b010, 0b110, 0b100, 0b101)
    assert disk.antipode(0b001) == 0b110
    assert disk.antipode(0b000) is None
    assert antipodal_vertices(q3_minus) == frozenset(disk.boundary)


def test_full_subdivisions_are_not_disks(sk4, q3):
    assert is_disk(sk4) is None
    assert is_disk(q3) is None
    assert antipode(sk4, 0b0011) == 0b1100
    assert antipode(sk4, 0b0001) is None


def test_disk_of_an_induced_subgraph(q3):
    disk = is_disk(q3, {0b000, 0b001, 0b011, 0b010})

    assert disk.m == 2
    assert set(disk.boundary) == {0b000, 0b001, 0b011, 0b010}
    assert is_disk(q3, {0b000, 0b011}) is None


def test_affine_witness(q3_minus):
    disk = is_disk(q3_minus)

    assert affine_witness(disk, 0b001, 0b001) == (0b001, 0b110)
    assert affine_witness(disk, 0b000, 0b000) == (0b001, 0b110)
    with pytest.raises(UnknownVertex):
        affine_witness(disk, 0b111, 0b000)


def test_classify_convex_cycle(c6):
    [hexagon] = isometric_cycles(c6)

    classification = classify_isometric_cycle(c6, hexagon)

    assert classification.kind is CycleKind.CONVEX_CYCLE
    assert classification.hull == c6.vertex_set


def test_classify_squares_of_q3_minus(q3_minus):
    square = [0b000, 0b001, 0b011, 0b010]

    assert classify_isometric_cycle(q3_minus, square).kind is CycleKind.CONVEX_CYCLE


def test_classify_hexagon_of_q3_minus(q3_minus):
    hexagon = [0b001, 0b011, 0b010, 0b110, 0b100, 0b101]

    classification = classify_isometric_cycle(q3_minus, hexagon)

    assert classification.kind is CycleKind.Q_THREE_MINUS
    assert classification.hull == q3_minus.vertex_set


def test_classify_hexagon_of_a_full_subdivision(sk4):
    hexagon = isometric_cycles(sk4)[0]

    classification = classify_isometric_cycle(sk4, hexagon)

    assert classification.kind is CycleKind.FULL_SUBDIVISION
    assert classification.n == 4
    assert classification.to_dict()["kind"] == "full-subdivision"


def test_classify_long_cycle(c8):
    [octagon] = isometric_cycles(c8)

    classification = classify_isometric_cycle(c8, octagon)

    assert classification.kind is CycleKind.GATED_DISK
    assert classification.disk.m == 4


def test_classify_needs_a_two_dimensional_host(q3):
    with pytest.raises(HostNotTwoDimensional):
        classify_isometric_cycle(q3, [0b000, 0b001, 0b011, 0b010])


def test_hexagon_hulls_are_hexagons_or_cubes_minus_a_vertex(planar4):
    cube_minus = generators.q_three_minus()
    for graph in planar4:
        for cycle in isometric_cycles(graph):
            if cycle.length != 6:
                continue
            hull = convex_hull(graph, cycle.vertices).vertices

            assert hull == cycle.vertex_set or is_isomorphic(graph.induced(hull), cube_minus)


def test_every_isometric_cycle_is_classified(planar4):
    for graph in planar4:
        for cycle in isometric_cycles(graph):
            found = classify_isometric_cycle(graph, cycle)

            assert is_gated(graph, found.hull)
            if cycle.length >= 8:
                assert found.kind is CycleKind.GATED_DISK
