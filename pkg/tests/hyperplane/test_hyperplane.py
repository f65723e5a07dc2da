import pytest

from pcube.exceptions import NotVCOne
from pcube.hyperplane import (
    buneman_tree,
    hyperplane,
    incompatible_pair,
    is_virtual_isometric_tree,
    split_compatibility,
)
from pcube.minors.families import SetFamily, vc_dimension


def test_hyperplane_of_a_cube_is_a_square(q3):
    plane = hyperplane(q3, 0)

    assert plane.members == frozenset({0b00, 0b01, 0b10, 0b11})
    assert plane.edges == ((0, 1), (0, 2), (1, 3), (2, 3))
    assert vc_dimension(plane.family) == 2
    assert not is_virtual_isometric_tree(plane.family)


def test_hyperplane_of_a_hexagon_has_two_members(c6):
    plane = hyperplane(c6, 0)

    assert plane.members == frozenset({0b00, 0b11})
    assert plane.edges == ()
    assert is_virtual_isometric_tree(plane.family)


def test_incompatible_pair_detection():
    square = SetFamily.of(2, [0, 1, 2, 3])

    assert incompatible_pair(square) == (0, 1)
    assert not split_compatibility(square)
    with pytest.raises(NotVCOne) as exc:
        buneman_tree(square)
    assert exc.value.pair == (0, 1)


def test_buneman_tree_of_two_far_apart_members():
    tree = buneman_tree(SetFamily.of(2, [0b00, 0b11]))

    assert tree.vertices == frozenset({0b00, 0b01, 0b11})
    assert tree.edges == ((0, 1), (1, 3))
    assert tree.validate([0b00, 0b11])


def test_buneman_tree_of_singletons_is_a_star():
    family = SetFamily.of(3, [0b001, 0b010, 0b100])

    tree = buneman_tree(family)

    assert tree.vertices == frozenset({0b000, 0b001, 0b010, 0b100})
    assert tree.distances_from(0b001)[0b100] == 2
    assert tree.validate(family.members)


def test_hyperplanes_of_two_dimensional_graphs_are_virtual_trees(sk4, c8, q3_minus):
    for graph in (sk4, c8, q3_minus):
        assert all(is_virtual_isometric_tree(hyperplane(graph, i).family) for i in range(graph.m))


def test_two_dimensionality_is_seen_by_hyperplanes(corpus4, sampled4):
    for graph in (*corpus4, *sampled4):
        thin = all(vc_dimension(hyperplane(graph, i).family) <= 1 for i in range(graph.m))
        trees = all(is_virtual_isometric_tree(hyperplane(graph, i).family) for i in range(graph.m))
        assert thin == trees == (vc_dimension(graph) <= 2)
