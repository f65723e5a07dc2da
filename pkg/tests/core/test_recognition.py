import networkx as nx
import pytest

from pcube import generators
from pcube.canonical import canonical_form, is_isomorphic
from pcube.core.recognition import recognize
from pcube.exceptions import HalfspaceNotConvex, NotBipartite, NotConnected


def test_recognize_hexagon(c6):
    recognition = recognize(nx.cycle_graph(6))

    assert recognition.m == 3
    assert recognition.labels[0] == 0
    assert len(recognition.classes) == 3
    assert all(len(edges) == 2 for edges in recognition.classes)
    assert is_isomorphic(recognition.graph, c6)


def test_recognize_cube(q3):
    cube = nx.convert_node_labels_to_integers(nx.hypercube_graph(3))

    recognition = recognize(cube)

    assert recognition.graph == q3


def test_recognize_tree_uses_one_class_per_edge():
    recognition = recognize(nx.star_graph(3))

    assert recognition.m == 3
    assert recognition.graph.n == 4


def test_recognize_single_vertex():
    graph = nx.Graph()
    graph.add_node(0)

    assert recognize(graph).graph.n == 1


def test_complete_bipartite_k23_has_non_convex_halfspace():
    with pytest.raises(HalfspaceNotConvex) as exc:
        recognize(nx.complete_bipartite_graph(2, 3))

    path = exc.value.path
    assert len(path) == 3
    assert exc.value.edge is not None


def test_odd_cycle_is_not_bipartite():
    with pytest.raises(NotBipartite):
        recognize(nx.cycle_graph(5))


def test_disconnected_graph():
    graph = nx.Graph([(0, 1), (2, 3)])

    with pytest.raises(NotConnected) as exc:
        recognize(graph)

    assert exc.value.component == frozenset({0, 1})


def test_canonical_form_is_invariant_under_relabeling(c6, sk4):
    assert canonical_form(c6.relabel(0b011, (1, 2, 0))) == canonical_form(c6)
    assert canonical_form(sk4.relabel(0b0110, (3, 1, 0, 2))) == canonical_form(sk4)
    assert canonical_form(c6) != canonical_form(sk4)


def test_recognize_hypercube_minus_antipodal_pair():
    graph = generators.q_minus_minus(4)

    assert recognize(graph.to_networkx()).m == 4
