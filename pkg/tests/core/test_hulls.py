import pytest

from pcube.core.hulls import convex_hull, gate, gated_hull, is_convex, is_gated, is_isometric
from pcube.exceptions import TooManyFreeClasses, UnknownVertex


def test_convex_hull_fixes_non_crossing_classes(q3):
    hull = convex_hull(q3, {0b000, 0b011})

    assert hull.vertices == frozenset({0b000, 0b001, 0b010, 0b011})
    assert str(hull.region) == "±±-"


def test_convexity_in_a_cycle(c6):
    assert is_convex(c6, {0b000, 0b001, 0b011})
    assert not is_convex(c6, {0b000, 0b111})
    assert is_convex(c6, set())


def test_isometric_subsets(c6):
    assert is_isometric(c6, {0b000, 0b001, 0b011, 0b111})
    assert not is_isometric(c6, {0b001, 0b100})


def test_gates(q3, c6):
    assert gate(q3, 0b111, {0b000, 0b001, 0b010, 0b011}) == 0b011
    assert gate(c6, 0b111, {0b000, 0b001}) == 0b001
    assert gate(c6, 0b110, {0b000, 0b001, 0b011}) is None


def test_edges_of_a_cycle_are_gated_but_long_paths_are_not(c6):
    assert is_gated(c6, {0b000, 0b001})
    assert not is_gated(c6, {0b000, 0b001, 0b011})


def test_gated_hull_of_a_path_in_a_hexagon_is_the_hexagon(c6):
    assert gated_hull(c6, {0b000, 0b001, 0b011}) == c6.vertex_set


def test_gated_hull_of_a_gated_set_is_itself(q3):
    face = frozenset({0b000, 0b001, 0b010, 0b011})

    assert gated_hull(q3, face) == face


def test_gated_hull_budget(q3):
    with pytest.raises(TooManyFreeClasses):
        gated_hull(q3, {0}, budget=4)


def test_unknown_vertices_are_rejected(c6):
    with pytest.raises(UnknownVertex):
        convex_hull(c6, {0b101})
