"""Chordality testing, chordless cycles, and clique matrices.

The perfect elimination ordering engine is maximum cardinality search
(MCS): repeatedly pick a vertex with the most already-chosen neighbors
and prepend it, yielding an order that is a perfect elimination ordering
exactly when the graph is chordal.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .errors import ContractViolationError, InputDomainError
from .graph import SimpleGraph
from .matrix import SparseBinaryMatrix, from_lists


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]


@dataclass(frozen=True)
class CliqueMatrixBundle:
    """Clique matrix of a chordal graph: a row per vertex, a column per
    maximal clique."""

    matrix: SparseBinaryMatrix
    vertex_of_row: tuple[int, ...]
    clique_members: tuple[tuple[int, ...], ...]


def elimination_order(g: SimpleGraph) -> EliminationOrdering:
    """MCS ordering; a perfect elimination ordering iff g is chordal."""
    n = g.num_vertices
    weight = [0] * n
    done = [False] * n
    heap = [(0, v) for v in range(n)]
    order = []
    while heap:
        w, v = heapq.heappop(heap)
        if done[v] or -w != weight[v]:
            continue
        done[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not done[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    order.reverse()
    return EliminationOrdering(tuple(order))


def _peo_failure(g: SimpleGraph, peo: EliminationOrdering):
    """First PEO violation (v, x, y): x and y are non-adjacent later
    neighbors of v; None if the ordering is a valid PEO.

    Uses the standard linear-time check: for each vertex v, only the pair
    (parent, w) needs testing, where parent is v's earliest later
    neighbor and w ranges over the other later neighbors.
    """
    pos = [0] * g.num_vertices
    for i, v in enumerate(peo.order):
        pos[v] = i
    for v in peo.order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=lambda u: pos[u])
        for w in later:
            if w != parent and not g.has_edge(parent, w):
                return (v, parent, w)
    return None


def is_chordal(g: SimpleGraph) -> tuple[bool, EliminationOrdering]:
    peo = elimination_order(g)
    return _peo_failure(g, peo) is None, peo


def _shrink_chordless(g: SimpleGraph, cycle: list[int]) -> list[int]:
    """Shorten a cycle (length >= 4) across chords until chordless."""
    while True:
        k = len(cycle)
        chord = None
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if g.has_edge(cycle[i], cycle[j]):
                    chord = (i, j)
                    break
            if chord:
                break
        if chord is None:
            return cycle
        i, j = chord
        # the chord splits the cycle in two shorter cycles; keep one of
        # length >= 4
        side1 = cycle[i:j + 1]
        side2 = cycle[j:] + cycle[:i + 1]
        cycle = side1 if len(side1) >= 4 else side2
        if len(cycle) < 4:
            raise ContractViolationError("cycle shrank below length 4")


def chordless_cycle(g: SimpleGraph) -> list[int]:
    """A chordless cycle of length >= 4 of a non-chordal graph."""
    peo = elimination_order(g)
    witness = _peo_failure(g, peo)
    if witness is None:
        raise InputDomainError("graph is chordal")
    v, x, y = witness
    # shortest x-y path avoiding N[v] other than x, y themselves
    blocked = (set(g.adj[v]) | {v}) - {x, y}
    parent = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in g.adj[u]:
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    if y not in parent:
        raise ContractViolationError("witness neighbors not connected outside N[v]")
    path = [y]
    while path[-1] is not None and path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    cycle = [v] + path
    return _shrink_chordless(g, cycle)


def clique_matrix(g: SimpleGraph, peo: EliminationOrdering) -> CliqueMatrixBundle:
    """Clique matrix of a chordal graph from a valid PEO.

    Candidate cliques are each vertex plus its later neighbors; the
    candidate of v is non-maximal exactly when some earlier vertex u has
    v as its earliest later neighbor and one more later neighbor than v.
    """
    if _peo_failure(g, peo) is not None:
        raise ContractViolationError("ordering is not a perfect elimination ordering")
    n = g.num_vertices
    pos = [0] * n
    for i, v in enumerate(peo.order):
        pos[v] = i
    later = [sorted((u for u in g.adj[v] if pos[u] > pos[v]), key=lambda u: pos[u])
             for v in range(n)]
    subsumed = [False] * n
    for u in range(n):
        if later[u]:
            v = later[u][0]
            if len(later[u]) == len(later[v]) + 1:
                subsumed[v] = True
    cliques = [tuple(sorted([v] + later[v])) for v in range(n) if not subsumed[v]]
    row_cols: list[list[int]] = [[] for _ in range(n)]
    for j, members in enumerate(cliques):
        for v in members:
            row_cols[v].append(j)
    matrix = from_lists(row_cols, len(cliques))
    return CliqueMatrixBundle(matrix, tuple(range(n)), tuple(cliques))
