"""SimpleGraph container, subgraphs, components, and text round trips."""

import pytest

from tuckerlb.errors import InputDomainError
from tuckerlb.graph import (
    SimpleGraph,
    connected_components,
    format_graph,
    from_edges,
    induced_subgraph,
    parse_graph,
)


def test_from_edges_basic():
    g = from_edges(4, [(0, 1), (1, 2), (1, 0)])
    assert g.num_vertices == 4
    assert g.num_edges == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_from_edges_rejects_bad_edges():
    with pytest.raises(InputDomainError):
        from_edges(3, [(0, 3)])
    with pytest.raises(InputDomainError):
        from_edges(3, [(1, 1)])


def test_induced_subgraph_relabels():
    g = from_edges(5, [(0, 2), (2, 4), (1, 3)])
    sub, ids = induced_subgraph(g, [4, 2, 0])
    assert ids == [0, 2, 4]
    assert sub.num_vertices == 3
    assert sub.has_edge(0, 1) and sub.has_edge(1, 2)
    assert not sub.has_edge(0, 2)


def test_connected_components():
    g = from_edges(6, [(0, 1), (1, 2), (4, 5)])
    assert connected_components(g) == [[0, 1, 2], [3], [4, 5]]


def test_graph_text_round_trip():
    g = from_edges(5, [(0, 4), (1, 2), (2, 3)])
    assert parse_graph(format_graph(g)) == g


def test_parse_graph_rejects_garbage():
    with pytest.raises(InputDomainError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(InputDomainError):
        parse_graph("")


def test_empty_graph():
    g = SimpleGraph(0)
    assert g.num_edges == 0
    assert connected_components(g) == []
    assert parse_graph(format_graph(g)) == g
