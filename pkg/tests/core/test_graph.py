import networkx as nx
import pytest

from pcube import generators
from pcube.core.graph import CubeGraph, Region, from_labels, restrict_to_region
from pcube.core.labels import Sign, delete_coordinate, from_bitstring, insert_coordinate, to_bitstring
from pcube.exceptions import EmptyRegion, InvalidLabel, NotConnected, NotIsometric, UnknownCoordinate, UnknownVertex
from tests.conftest import labels


def test_bitstrings_put_coordinate_zero_first():
    assert to_bitstring(0b001, 3) == "100"
    assert from_bitstring("100") == 0b001
    assert from_bitstring(to_bitstring(0b110, 3)) == 0b110


def test_insert_and_delete_coordinate():
    assert delete_coordinate(0b1011, 1) == 0b101
    assert insert_coordinate(0b101, 1, 1) == 0b1011
    assert insert_coordinate(0b101, 1) == 0b1001


def test_from_labels_compacts_constant_coordinates():
    graph = from_labels(3, {0b100, 0b110})

    assert graph.m == 1
    assert graph.vertices == (0, 1)
    assert graph.coordinate_map == (1,)
    assert graph.offset == 0b100
    assert graph.lift(1) == 0b110


def test_from_labels_rejects_disconnected_labels():
    with pytest.raises(NotConnected) as exc:
        from_labels(2, {0b00, 0b11})

    assert exc.value.component == frozenset({0})


def test_from_labels_rejects_non_isometric_path():
    with pytest.raises(NotIsometric) as exc:
        from_labels(3, labels("000", "100", "110", "111", "011"))

    assert exc.value.pair == (0, 6)
    assert exc.value.graph_distance == 4
    assert exc.value.hamming_distance == 2


@pytest.mark.parametrize("bad", [set(), {4}, {-1}])
def test_from_labels_rejects_invalid_labels(bad):
    with pytest.raises(InvalidLabel):
        from_labels(2, bad)


def test_hypercube_structure(q3):
    assert q3.n == 8
    assert len(q3.edges()) == 12
    assert all(len(theta.edges) == 4 for theta in q3.theta_classes())
    assert q3.halfspace(0, Sign.PLUS) == frozenset({1, 3, 5, 7})
    assert q3.interval(0, 7) == q3.vertex_set
    assert nx.is_isomorphic(q3.to_networkx(), nx.hypercube_graph(3))


def test_cycle_theta_classes(c6):
    assert c6.vertices == (0, 1, 3, 4, 6, 7)
    theta = c6.theta_class(1)

    assert theta.edges == ((1, 3), (4, 6))
    assert theta.boundary_minus == frozenset({1, 4})
    assert theta.plus == frozenset({3, 6, 7})
    assert c6.interval(1, 6) == c6.vertex_set


def test_lookups_fail_for_unknown_vertices_and_coordinates(c6):
    with pytest.raises(UnknownVertex):
        c6.neighbors(0b101)
    with pytest.raises(UnknownCoordinate):
        c6.theta_class(3)


def test_relabel_is_a_symmetry_of_the_cube(q3):
    assert q3.relabel(0b101, (2, 0, 1)) == q3


def test_induced_subgraph_lifts_back(q3):
    face = q3.induced({0b100, 0b101, 0b110, 0b111})

    assert face.m == 2
    assert {face.lift(v) for v in face.vertices} == {0b100, 0b101, 0b110, 0b111}


def test_region_selection(q3, c6):
    region = Region.parse("+*-")

    assert str(region) == "+±-"
    assert region.select(q3) == frozenset({0b001, 0b011})
    with pytest.raises(EmptyRegion):
        restrict_to_region(c6, Region.parse("+-+"))


def test_generators_sizes():
    assert generators.path(4).m == 3
    assert generators.even_cycle(4).n == 8
    assert generators.full_subdivision(4).n == 10
    assert generators.full_subdivision_star(4).n == 11
    assert generators.q_minus_minus(4).n == 14
    assert generators.q_three_minus().n == 7
    assert isinstance(generators.hypercube(0), CubeGraph)
