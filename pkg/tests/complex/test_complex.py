import pytest

from pcube.analysis import characterize
from pcube.complex import (
    amalgam_decompose,
    carrier,
    cell_complex,
    euler_characteristic,
    extended_halfspace,
    half_carrier,
    is_two_dimensional_amalgam,
    validate_amalgam_tree,
)
from pcube.core.graph import from_labels
from pcube.core.hulls import is_isometric
from pcube.core.labels import Sign
from pcube.exceptions import AmalgamError, HostNotTwoDimensional
from pcube.generators import hypercube
from pcube.minors.families import is_two_dimensional


def test_cell_complex_of_a_cube(q3):
    complex_ = cell_complex(q3)

    assert len(complex_.cells) == 6
    assert complex_.cycle_rank == 5
    assert complex_.rank == 5
    assert complex_.spans
    assert complex_.euler_characteristic() == 2
    assert all(len(cells) == 2 for cells in complex_.edge_cells().values())


def test_cell_complex_of_a_full_subdivision(sk4):
    complex_ = cell_complex(sk4)

    assert len(complex_.cells) == 4
    assert complex_.cycle_rank == 3
    assert complex_.spans


def test_cell_complex_of_a_tree():
    complex_ = cell_complex(hypercube(1))

    assert complex_.cells == ()
    assert complex_.rank == 0
    assert complex_.spans


def test_carriers_of_a_domino(domino):
    assert carrier(domino, 1) == frozenset({0b000, 0b001, 0b010, 0b011})
    assert half_carrier(domino, 1, Sign.MINUS) == frozenset({0b000, 0b001})
    assert extended_halfspace(domino, 1, Sign.PLUS) == frozenset({0b000, 0b001, 0b010, 0b011})
    assert extended_halfspace(domino, 1, Sign.BOTH) == domino.vertex_set
    assert carrier(domino, 0) == domino.vertex_set


def test_two_dimensional_amalgam_of_a_domino(domino):
    left, right = {0b000, 0b001, 0b010, 0b011}, {0b000, 0b001, 0b100, 0b101}

    assert is_two_dimensional_amalgam(domino, left, right)
    assert not is_two_dimensional_amalgam(domino, domino.vertex_set, {0b000, 0b001})


def test_leaves_are_returned_as_they_are(c6, sk4):
    assert amalgam_decompose(c6).kind == "cycle"
    assert amalgam_decompose(sk4).kind == "full-subdivision"


def test_decompose_star_of_a_full_subdivision(sk4_star):
    tree = amalgam_decompose(sk4_star)

    leaves = tree.leaves()
    assert len(leaves) == 6
    assert all(leaf.kind == "cycle" and len(leaf.vertices) == 4 for leaf in leaves)
    assert validate_amalgam_tree(sk4_star, tree)
    assert tree.render()[0].startswith("amalgam (11 vertices)")


def test_decompose_tree_with_a_cut_vertex():
    tree = amalgam_decompose(from_labels(3, {0b000, 0b001, 0b010, 0b100}))

    assert tree.kind == "articulation"
    assert tree.split_vertex == 0
    assert all(leaf.kind == "edge" for leaf in tree.leaves())


def test_decompose_needs_a_two_dimensional_graph(q3):
    with pytest.raises(HostNotTwoDimensional):
        amalgam_decompose(q3)
    with pytest.raises(AmalgamError):
        amalgam_decompose(q3, check_dimension=False)


def test_euler_characteristics(sk4, q3, c6):
    assert euler_characteristic(sk4) == 2
    assert euler_characteristic(sk4, "com") == 1
    assert euler_characteristic(sk4, "polyhedral") == 1
    assert euler_characteristic(c6, "polyhedral") == 1
    with pytest.raises(HostNotTwoDimensional):
        euler_characteristic(q3, "polyhedral")
    with pytest.raises(ValueError):
        euler_characteristic(c6, "spherical")


def test_completed_corpus_graphs_are_contractible(planar4):
    for graph in planar4:
        assert euler_characteristic(graph, "com") == 1


def test_corpus_decompositions_are_valid(planar4):
    for graph in planar4:
        tree = amalgam_decompose(graph)
        assert validate_amalgam_tree(graph, tree)
        assert set().union(*(leaf.vertices for leaf in tree.leaves())) == graph.vertex_set


def test_carriers_and_extended_halfspaces_stay_two_dimensional(planar4):
    for graph in planar4:
        for i in range(graph.m):
            parts = [carrier(graph, i)]
            for sign in (Sign.MINUS, Sign.PLUS):
                parts += [half_carrier(graph, i, sign), extended_halfspace(graph, i, sign)]
            for part in parts:
                assert is_isometric(graph, part)
                assert is_two_dimensional(from_labels(graph.m, part))


def test_full_subdivisions_glued_along_an_edge_decompose(glued_sk4):
    tree = amalgam_decompose(glued_sk4)

    assert validate_amalgam_tree(glued_sk4, tree)
    cells = [leaf for leaf in tree.leaves() if leaf.kind == "full-subdivision"]
    assert len(cells) == 2
    assert set().union(*(leaf.vertices for leaf in tree.leaves())) == glued_sk4.vertex_set

    report = characterize(glued_sk4)
    assert report.conditions["v"]
    assert report.consistent
