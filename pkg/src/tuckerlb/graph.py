"""Undirected simple graphs stored as adjacency sets."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InputDomainError


class SimpleGraph:
    """An undirected graph on vertices 0..n-1 with set-based adjacency.

    The adjacency structure is built once and treated as immutable.
    """

    def __init__(self, num_vertices: int, adjacency: Sequence[set] | None = None):
        if num_vertices < 0:
            raise InputDomainError("negative vertex count")
        self.num_vertices = num_vertices
        if adjacency is None:
            adjacency = [set() for _ in range(num_vertices)]
        if len(adjacency) != num_vertices:
            raise InputDomainError("adjacency length must equal num_vertices")
        self.adj = [frozenset(s) for s in adjacency]
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise InputDomainError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < num_vertices:
                    raise InputDomainError(f"neighbor {u} out of range")
                if v not in self.adj[u]:
                    raise InputDomainError(f"asymmetric edge ({v},{u})")

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.num_vertices) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.num_vertices == other.num_vertices
            and self.adj == other.adj
        )

    def __repr__(self):
        return f"SimpleGraph({self.num_vertices}, edges={self.edges()})"


def from_edges(num_vertices: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    adjacency = [set() for _ in range(num_vertices)]
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InputDomainError(f"edge ({u},{v}) out of range")
        if u == v:
            raise InputDomainError(f"self-loop at vertex {u}")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return SimpleGraph(num_vertices, adjacency)


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    """Subgraph induced by the vertex set, relabeled by rank.

    Returns the subgraph and the list mapping new labels to original ids.
    """
    chosen = sorted(set(vertices))
    if chosen and (chosen[0] < 0 or chosen[-1] >= g.num_vertices):
        raise InputDomainError("vertex index out of range")
    rank = {v: i for i, v in enumerate(chosen)}
    keep = set(chosen)
    adjacency = [
        {rank[u] for u in g.adj[v] if u in keep} for v in chosen
    ]
    return SimpleGraph(len(chosen), adjacency), chosen


def connected_components(g: SimpleGraph) -> list[list[int]]:
    seen = [False] * g.num_vertices
    comps = []
    for s in range(g.num_vertices):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


# --- text format: "n m" header, then one "u v" line per edge ---

def format_graph(g: SimpleGraph) -> str:
    lines = [f"{g.num_vertices} {g.num_edges}"]
    for u, v in sorted(g.edges()):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    tokens = text.split()
    if len(tokens) < 2:
        raise InputDomainError("missing graph header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise InputDomainError(f"bad graph header: {tokens[:2]!r}") from e
    if len(tokens) != 2 + 2 * m:
        raise InputDomainError("edge count does not match header")
    edges = []
    for i in range(m):
        try:
            u, v = int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])
        except ValueError as e:
            raise InputDomainError("bad edge line") from e
        edges.append((u, v))
    return from_edges(n, edges)
