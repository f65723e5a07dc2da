import pytest

from pcube.cells.subdivisions import FullSubdivision, as_full_subdivision, full_subdivisions, standardize
from pcube.exceptions import NotFullSubdivision


def test_full_subdivision_is_found_in_itself(sk4):
    [found] = full_subdivisions(sk4)

    assert found.n == 4
    assert found.originals == (0b0001, 0b0010, 0b0100, 0b1000)
    assert found.subdivision[(0b0001, 0b0100)] == 0b0101
    assert found.center == 0
    assert found.convex and found.gated
    assert not found.extends_to_star


def test_full_subdivision_inside_its_star(sk4_star):
    [found] = full_subdivisions(sk4_star)

    assert found.extends_to_star
    assert not found.convex
    assert not found.gated


def test_smaller_subdivisions_are_not_maximal(sk4):
    assert [h.n for h in full_subdivisions(sk4, n_min=3)] == [4]


def test_as_full_subdivision(sk4):
    hexagon = as_full_subdivision(sk4, {0b0001, 0b0010, 0b0100})

    assert hexagon.n == 3
    assert len(hexagon.vertices) == 6
    assert as_full_subdivision(sk4, {0b0001, 0b0010, 0b1100}) is None
    assert as_full_subdivision(sk4, {0b0001, 0b0010}) is None


def test_full_subdivisions_rejects_small_n(sk4):
    with pytest.raises(ValueError):
        full_subdivisions(sk4, n_min=2)


def test_standardize_recovers_the_standard_embedding(sk4):
    shuffled = sk4.relabel(0b0101, (1, 0, 3, 2))
    [found] = full_subdivisions(shuffled)

    embedding = standardize(shuffled, found)

    assert embedding.graph == sk4
    assert embedding.subdivision.originals == (0b0001, 0b0010, 0b0100, 0b1000)
    assert embedding.shift == found.center


def test_standardize_rejects_a_foreign_subdivision(sk4):
    fake = FullSubdivision(n=3, originals=(0b0001, 0b0010, 0b0100), subdivision={})

    with pytest.raises(NotFullSubdivision):
        standardize(sk4, fake)


def test_convex_full_subdivisions_are_gated(planar4):
    for graph in planar4:
        for found in full_subdivisions(graph):
            if found.convex:
                assert found.gated


def test_maximal_convex_subdivision_has_no_other_singletons(planar4):
    for graph in planar4:
        for found in full_subdivisions(graph):
            if not found.convex:
                continue
            embedding = standardize(graph, found)
            singletons = {1 << i for i in range(embedding.graph.m) if 1 << i in embedding.graph}

            assert singletons == set(embedding.subdivision.originals)
