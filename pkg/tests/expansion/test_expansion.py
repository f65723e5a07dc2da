import pytest

from pcube import generators
from pcube.cells.cycles import convex_cycles
from pcube.core.hulls import is_convex
from pcube.core.labels import Sign
from pcube.exceptions import EdgeNotCovered, EmptyIntersection, NotIsometricPart, VertexNotCovered
from pcube.expansion import (
    IsometricCover,
    check_cover,
    enumerate_covers,
    expand,
    expansion_sequence,
    is_peripheral,
    preserves_dimension,
)
from pcube.minors.families import SetFamily, shattered_sets, vc_dimension
from pcube.minors.operations import contract


def test_full_cover_of_a_square_expands_to_a_cube():
    square = generators.hypercube(2)

    result = expand(square, IsometricCover(square.vertex_set, square.vertex_set))

    assert result.graph == generators.hypercube(3)
    assert result.new_class == 2
    assert result.copies[0b01] == (0b001, 0b101)


def test_peripheral_expansion_adds_a_pendant_vertex(c6):
    cover = check_cover(c6, c6.vertex_set, {0})

    result = expand(c6, cover)

    assert is_peripheral(cover)
    assert (result.graph.m, result.graph.n) == (4, 7)
    assert result.copies[0] == (0b0000, 0b1000)
    assert result.copies[0b111] == (0b0111,)


def test_uncovered_edge(c6):
    with pytest.raises(EdgeNotCovered) as exc:
        check_cover(c6, {0b000, 0b001, 0b011}, {0b111, 0b110, 0b100})

    assert exc.value.edge == (0b000, 0b100)


def test_uncovered_vertex_and_empty_intersection():
    point = generators.hypercube(0)

    with pytest.raises(VertexNotCovered):
        check_cover(point, set(), set())
    with pytest.raises(EmptyIntersection):
        check_cover(point, {0}, set())


def test_parts_must_be_isometric(c6):
    with pytest.raises(NotIsometricPart):
        check_cover(c6, {0b000, 0b001, 0b011, 0b111, 0b110}, {0b110, 0b100, 0b000})


def test_expansion_sequence_rebuilds_the_graph(sk4):
    steps = expansion_sequence(sk4)

    assert len(steps) == 4
    assert steps[0].graph == generators.hypercube(0)
    assert steps[-1].result == sk4
    for step in steps:
        assert expand(step.graph, step.cover).graph == step.result
        assert preserves_dimension(step.graph, step.cover, 2)


def test_dimension_preservation_of_the_full_cover():
    square = generators.hypercube(2)
    cover = IsometricCover(square.vertex_set, square.vertex_set)

    assert not preserves_dimension(square, cover, 2)
    assert preserves_dimension(square, cover, 3)


def test_covers_of_a_square():
    square = generators.hypercube(2)

    covers = list(enumerate_covers(square))

    assert len(covers) == 15
    assert IsometricCover(square.vertex_set, square.vertex_set) in covers
    for cover in covers:
        assert check_cover(square, cover.v1, cover.v2) == cover


def test_cover_budget():
    square = generators.hypercube(2)

    assert len(list(enumerate_covers(square, budget=3))) == 3


def _covers(planar4):
    for graph in planar4:
        for cover in enumerate_covers(graph, budget=40, max_vertices=6):
            yield graph, cover


def test_dimension_check_agrees_with_the_expanded_graph(planar4):
    for graph, cover in _covers(planar4):
        expanded = expand(graph, cover).graph

        assert preserves_dimension(graph, cover, 2) == (vc_dimension(expanded) <= 2)


def test_sets_shattered_by_both_parts_are_shattered_by_their_intersection(planar4):
    for graph, cover in _covers(planar4):
        first = set(shattered_sets(SetFamily(graph.m, cover.v1)))
        second = set(shattered_sets(SetFamily(graph.m, cover.v2)))
        middle = set(shattered_sets(SetFamily(graph.m, cover.v0)))

        assert first & second <= middle


def test_contracting_the_new_class_undoes_the_expansion(planar4):
    for graph, cover in _covers(planar4):
        result = expand(graph, cover)

        assert contract(result.graph, result.new_class) == graph


def test_expansion_keeps_convex_sets_convex(planar4):
    for graph, cover in _covers(planar4):
        result = expand(graph, cover)
        convex_sets = [graph.halfspace(i, sign) for i in range(graph.m) for sign in (Sign.MINUS, Sign.PLUS)]
        convex_sets += [cycle.vertex_set for cycle in convex_cycles(graph)]
        for part in convex_sets:
            images = {image for v in part for image in result.copies[v]}

            assert is_convex(result.graph, images)
