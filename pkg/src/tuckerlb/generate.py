"""Seeded instance generators for tests, the CLI, and benchmarks.

Every generator takes an explicit random.Random; nothing touches global
randomness, so a fixed seed reproduces instances byte for byte.
"""

from __future__ import annotations

import heapq
import random

from .errors import InputDomainError
from .graph import SimpleGraph, from_edges
from .lb import LbKind, gen_lb
from .matrix import SparseBinaryMatrix, from_lists
from .tucker import TuckerKind, gen_tucker


def random_c1p_matrix(
    rng: random.Random, num_rows: int, num_cols: int, max_len: int = 8
) -> SparseBinaryMatrix:
    """Random bounded-length intervals on a line: C1P in the identity
    ordering, with O(num_rows) ones."""
    rows = []
    for _ in range(num_rows):
        a = rng.randrange(num_cols)
        b = min(num_cols - 1, a + rng.randrange(0, max_len + 1))
        rows.append(range(a, b + 1))
    return from_lists(rows, num_cols)


def planted_tucker(
    rng: random.Random, kind: TuckerKind, pad_rows: int, pad_cols: int
) -> SparseBinaryMatrix:
    """A C1P padding matrix with a Tucker matrix embedded under random
    row and column permutations; never has C1P."""
    base = gen_tucker(kind)
    num_cols = base.num_cols + pad_cols
    colmap = rng.sample(range(num_cols), base.num_cols)
    rows = [sorted(colmap[c] for c in r.cols) for r in base.rows]
    pad = random_c1p_matrix(rng, pad_rows, num_cols)
    rows.extend(list(r.cols) for r in pad.rows)
    rng.shuffle(rows)
    return from_lists(rows, num_cols)


def random_interval_graph(
    rng: random.Random, n: int, max_len: int = 12
) -> SimpleGraph:
    """Intersection graph of n random bounded-length intervals.

    Bounded lengths keep the expected degree constant, so the graph has
    O(n) edges; intersections are found with a left-to-right sweep."""
    span = max(1, n)
    intervals = []
    for _ in range(n):
        a = rng.randrange(span)
        b = min(span - 1, a + rng.randrange(0, max_len + 1))
        intervals.append((a, b))
    order = sorted(range(n), key=lambda v: intervals[v])
    edges = []
    active: list[tuple[int, int]] = []  # (right, vertex) min-heap
    for v in order:
        left, right = intervals[v]
        while active and active[0][0] < left:
            heapq.heappop(active)
        edges.extend((u, v) for _r, u in active)
        heapq.heappush(active, (right, v))
    return from_edges(n, edges)


def random_chordal_graph(rng: random.Random, n: int) -> SimpleGraph:
    """Random chordal graph grown along a clique tree: each new vertex
    attaches to a random subset of an existing clique bag, so reverse
    insertion order is a perfect elimination ordering."""
    if n == 0:
        return SimpleGraph(0)
    edges = []
    bags = [[0]]
    for v in range(1, n):
        bag = bags[rng.randrange(len(bags))]
        size = rng.randrange(len(bag) + 1)
        chosen = rng.sample(bag, size)
        edges.extend((u, v) for u in chosen)
        bags.append(chosen + [v])
    return from_edges(n, edges)


def lb_padded_graph(rng: random.Random, kind: LbKind, extra: int) -> SimpleGraph:
    """gen_lb(kind) plus pendant vertices hanging off random vertices;
    stays non-interval, with the LB subgraph intact."""
    base = gen_lb(kind)
    n = base.num_vertices
    edges = base.edges()
    for v in range(n, n + extra):
        edges.append((rng.randrange(v), v))
    return from_edges(n + extra, edges)


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


def random_matrix(
    rng: random.Random, num_rows: int, num_cols: int, p: float
) -> SparseBinaryMatrix:
    rows = [
        [c for c in range(num_cols) if rng.random() < p] for _ in range(num_rows)
    ]
    return from_lists(rows, num_cols)


def gen_instances(spec: str, seed: int = 0):
    """Generate one instance from a text spec like
    "planted family=M_III k=5 pad_rows=100 pad_cols=200".

    Known kinds: c1p, random-matrix, tucker, planted, interval, chordal,
    lb, lb-padded, random-graph.  Returns a matrix or a graph.
    """
    parts = spec.split()
    if not parts:
        raise InputDomainError("empty generator spec")
    name, kv = parts[0], {}
    for tok in parts[1:]:
        if "=" not in tok:
            raise InputDomainError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        kv[k] = v
    rng = random.Random(seed)

    def intval(key, default=None):
        if key not in kv:
            if default is None:
                raise InputDomainError(f"generator {name!r} needs {key}=")
            return default
        try:
            return int(kv[key])
        except ValueError as e:
            raise InputDomainError(f"bad integer for {key}: {kv[key]!r}") from e

    def floatval(key, default):
        try:
            return float(kv.get(key, default))
        except ValueError as e:
            raise InputDomainError(f"bad float for {key}: {kv[key]!r}") from e

    if name == "c1p":
        return random_c1p_matrix(rng, intval("rows"), intval("cols"))
    if name == "random-matrix":
        return random_matrix(rng, intval("rows"), intval("cols"), floatval("p", 0.3))
    if name == "tucker":
        if "family" not in kv:
            raise InputDomainError("tucker generator needs family=")
        return gen_tucker(TuckerKind(kv["family"], intval("k")))
    if name == "planted":
        if "family" not in kv:
            raise InputDomainError("planted generator needs family=")
        kind = TuckerKind(kv["family"], intval("k"))
        return planted_tucker(rng, kind, intval("pad_rows", 0), intval("pad_cols", 0))
    if name == "interval":
        return random_interval_graph(rng, intval("n"))
    if name == "chordal":
        return random_chordal_graph(rng, intval("n"))
    if name == "lb":
        if "family" not in kv:
            raise InputDomainError("lb generator needs family=")
        return gen_lb(LbKind(kv["family"], intval("n")))
    if name == "lb-padded":
        if "family" not in kv:
            raise InputDomainError("lb-padded generator needs family=")
        return lb_padded_graph(rng, LbKind(kv["family"], intval("n")), intval("extra", 0))
    if name == "random-graph":
        return random_graph(rng, intval("n"), floatval("p", 0.3))
    raise InputDomainError(f"unknown generator {name!r}")
