"""Overlap BFS, Venn classes, and configurations against quadratic oracles.

Two rows overlap when they intersect but neither contains the other; the
oracle builds that graph explicitly and checks components, BFS depths,
paths, and class boundaries.
"""

import random
from collections import deque

from tuckerlb.c1p import test_c1p as check_c1p
from tuckerlb.errors import NotConnectedError
from tuckerlb.matrix import from_lists
from tuckerlb.overlap import (
    find_010,
    find_101,
    overlap_bfs,
    overlap_components,
    shortest_overlap_path,
    venn_partition,
)


def overlaps(a, b):
    return bool(a & b) and not a <= b and not b <= a


def oracle_graph(row_sets):
    n = len(row_sets)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if overlaps(row_sets[i], row_sets[j]):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def oracle_depths(adj, start):
    depth = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in depth:
                depth[u] = depth[v] + 1
                queue.append(u)
    return depth


def random_c1p(rng, num_cols, num_rows):
    rows = []
    for _ in range(num_rows):
        a = rng.randrange(num_cols)
        b = min(num_cols - 1, a + rng.randrange(0, 5))
        rows.append(list(range(a, b + 1)))
    return from_lists(rows, num_cols)


def test_bfs_matches_oracle():
    rng = random.Random(11)
    for _ in range(300):
        m = random_c1p(rng, rng.randrange(3, 12), rng.randrange(1, 10))
        outcome = check_c1p(m)
        assert outcome.ok
        sets = [set(r.cols) for r in m.rows]
        adj = oracle_graph(sets)
        tree = overlap_bfs(m, outcome.ordering, 0)
        want = oracle_depths(adj, 0)
        assert tree.depth == want
        # parent pointers walk back to the root with decreasing depth
        for v, p in tree.parent.items():
            if p is None:
                assert v == tree.root
            else:
                assert p in adj[v]
                assert tree.depth[p] == tree.depth[v] - 1


def test_components_match_oracle():
    rng = random.Random(13)
    for _ in range(300):
        m = random_c1p(rng, rng.randrange(3, 12), rng.randrange(1, 10))
        outcome = check_c1p(m)
        sets = [set(r.cols) for r in m.rows]
        adj = oracle_graph(sets)
        seen = set()
        want = []
        for s in range(len(sets)):
            if s in seen:
                continue
            comp = sorted(oracle_depths(adj, s))
            seen.update(comp)
            want.append(comp)
        got = sorted(
            sorted(comp) for comp, _tree in overlap_components(m, outcome.ordering)
        )
        assert got == sorted(want)


def test_shortest_path_endpoints_and_length():
    rng = random.Random(17)
    for _ in range(200):
        m = random_c1p(rng, rng.randrange(3, 12), rng.randrange(2, 10))
        outcome = check_c1p(m)
        sets = [set(r.cols) for r in m.rows]
        adj = oracle_graph(sets)
        a = rng.randrange(m.num_rows)
        b = rng.randrange(m.num_rows)
        want = oracle_depths(adj, a)
        if b not in want:
            try:
                shortest_overlap_path(m, outcome.ordering, a, b)
                assert False, "expected NotConnectedError"
            except NotConnectedError:
                continue
        path = shortest_overlap_path(m, outcome.ordering, a, b)
        assert path[0] == a and path[-1] == b
        assert len(path) == want[b] + 1
        for u, v in zip(path, path[1:]):
            assert v in adj[u]


def test_venn_classes_by_membership_signature():
    rng = random.Random(19)
    for _ in range(200):
        m = random_c1p(rng, rng.randrange(3, 12), rng.randrange(1, 10))
        outcome = check_c1p(m)
        sets = [set(r.cols) for r in m.rows]
        for component, _tree in overlap_components(m, outcome.ordering):
            members = [sets[r] for r in component]
            if any(not s for s in members):
                continue
            vp = venn_partition(m, outcome.ordering, component)
            span = {c for cls in vp.constrained for c in cls}
            assert span == set().union(*members)
            assert set(vp.unconstrained) == set(range(m.num_cols)) - span
            # columns share a class iff they hit exactly the same members
            sig = {c: frozenset(i for i, s in enumerate(members) if c in s)
                   for c in span}
            for cls in vp.constrained:
                assert len({sig[c] for c in cls}) == 1
            reps = [sig[cls[0]] for cls in vp.constrained]
            assert len(set(reps)) == len(reps)


def test_configurations_match_exhaustive_search():
    rng = random.Random(23)
    for _ in range(200):
        m = random_c1p(rng, rng.randrange(3, 10), rng.randrange(1, 8))
        outcome = check_c1p(m)
        z_cols = frozenset(
            rng.sample(range(m.num_cols), rng.randrange(0, m.num_cols + 1))
        )
        pos = outcome.ordering.positions()
        for component, _tree in overlap_components(m, outcome.ordering):
            if any(not m.rows[r].cols for r in component):
                continue
            vp = venn_partition(m, outcome.ordering, component)
            span_cols = [c for cls in vp.constrained for c in cls]
            cls_of = {c: i for i, cls in enumerate(vp.constrained) for c in cls}
            for finder, pattern in ((find_101, (1, 0, 1)), (find_010, (0, 1, 0))):
                got = finder(vp, outcome.ordering, z_cols)
                exists = any(
                    (a in z_cols) == bool(pattern[0])
                    and (b in z_cols) == bool(pattern[1])
                    and (c in z_cols) == bool(pattern[2])
                    and cls_of[a] < cls_of[b] < cls_of[c]
                    for a in span_cols for b in span_cols for c in span_cols
                )
                assert (got is not None) == exists
                if got is not None:
                    a, b, c = got.cols
                    assert cls_of[a] < cls_of[b] < cls_of[c]
                    assert pos[a] < pos[b] < pos[c]
                    assert [v in z_cols for v in got.cols] == [
                        bool(x) for x in pattern
                    ]
