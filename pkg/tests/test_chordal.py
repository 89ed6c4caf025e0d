"""Chordality, elimination orderings, chordless cycles, clique matrices."""

import random

import networkx as nx
import pytest

from tuckerlb.chordal import (
    chordless_cycle,
    clique_matrix,
    elimination_order,
    is_chordal,
)
from tuckerlb.errors import InputDomainError
from tuckerlb.generate import random_chordal_graph, random_graph
from tuckerlb.graph import from_edges
from tuckerlb.matrix import intersection_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges())
    return h


def check_peo(g, peo):
    """Each vertex's later neighbors form a clique."""
    pos = {v: i for i, v in enumerate(peo.order)}
    for v in peo.order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if not g.has_edge(later[i], later[j]):
                    return False
    return True


def test_is_chordal_matches_networkx():
    rng = random.Random(43)
    for trial in range(400):
        n = rng.randrange(1, 12)
        if trial % 2 == 0:
            g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        else:
            g = random_chordal_graph(rng, n)
        chordal, peo = is_chordal(g)
        assert chordal == nx.is_chordal(to_nx(g))
        if chordal:
            assert sorted(peo.order) == list(range(n))
            assert check_peo(g, peo)


def test_chordless_cycle_properties():
    rng = random.Random(47)
    found = 0
    while found < 80:
        n = rng.randrange(4, 14)
        g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5]))
        chordal, _ = is_chordal(g)
        if chordal:
            continue
        found += 1
        cycle = chordless_cycle(g)
        k = len(cycle)
        assert k >= 4
        assert len(set(cycle)) == k
        for i, v in enumerate(cycle):
            assert g.has_edge(v, cycle[(i + 1) % k])
        # no chords
        on_cycle = set(cycle)
        for i, v in enumerate(cycle):
            chords = g.adj[v] & on_cycle
            assert chords == {cycle[(i - 1) % k], cycle[(i + 1) % k]}


def test_chordless_cycle_rejects_chordal_input():
    g = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(InputDomainError):
        chordless_cycle(g)


def test_clique_matrix_matches_networkx_cliques():
    rng = random.Random(53)
    for _ in range(200):
        n = rng.randrange(1, 14)
        g = random_chordal_graph(rng, n)
        chordal, peo = is_chordal(g)
        assert chordal
        bundle = clique_matrix(g, peo)
        got = sorted(
            sorted(bundle.vertex_of_row[i]
                   for i, r in enumerate(bundle.matrix.rows)
                   if c in r.cols)
            for c in range(bundle.matrix.num_cols)
        )
        want = sorted(sorted(cl) for cl in nx.find_cliques(to_nx(g)))
        assert got == want
        # vertex-row correspondence: the intersection graph of the rows is g
        order = sorted(range(n), key=lambda i: bundle.vertex_of_row[i])
        assert intersection_graph(bundle.matrix.with_rows(order)) == g


def test_elimination_order_covers_all_vertices():
    g = from_edges(5, [(0, 1), (2, 3)])
    peo = elimination_order(g)
    assert sorted(peo.order) == list(range(5))
