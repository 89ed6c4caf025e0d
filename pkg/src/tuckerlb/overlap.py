"""Overlap-graph machinery on the rows of a consecutive-ones-ordered matrix.

Rows are identified by their index in the matrix's row sequence.  Two rows
overlap when they intersect and neither contains the other; the overlap
graph is never materialized.  BFS runs over per-column lists of row
endpoints instead, so its cost is proportional to the matrix size rather
than to the number of overlap-graph edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .c1p import test_c1p
from .errors import ContractViolationError, NotConnectedError
from .matrix import ColumnOrdering, SparseBinaryMatrix, row_endpoints


@dataclass(frozen=True)
class OverlapBfsTree:
    root: int
    parent: dict
    order: tuple[int, ...]
    depth: dict


@dataclass(frozen=True)
class VennPartition:
    """Constrained Venn classes of a connected overlap component, in the
    left-to-right order of the component's ordering, plus the
    unconstrained class."""

    constrained: tuple[tuple[int, ...], ...]
    unconstrained: tuple[int, ...]
    #: leftmost position of the component's span
    span_start: int
    #: per-position index into constrained, for positions in the span
    class_of_position: tuple[int, ...]


@dataclass(frozen=True)
class Configuration:
    kind: str  # "1-0-1" or "0-1-0"
    cols: tuple[int, int, int]


@dataclass(frozen=True)
class SuitableTriple:
    a: int
    b: int
    z: int


class _EndpointLists:
    """Shared state for one or more OverlapBFS runs over the same matrix.

    For each column position i, r_lists[i] holds the rows whose right
    endpoint is at i, in ascending order of left endpoint, and l_lists[i]
    holds the rows whose left endpoint is at i, in descending order of
    right endpoint.  Rows are removed lazily: enqueued rows are skipped
    when they surface at the front of a list.
    """

    def __init__(self, m: SparseBinaryMatrix, ordering: ColumnOrdering):
        spans = row_endpoints(m, ordering, check=True).spans
        self.spans = spans
        k = m.num_cols
        # radix sort: bucket by secondary key first, then by primary key
        by_left = [[] for _ in range(k)]
        for r, span in enumerate(spans):
            if span is not None:
                by_left[span[0]].append(r)
        self.r_lists = [deque() for _ in range(k)]
        for bucket in by_left:
            for r in bucket:
                self.r_lists[spans[r][1]].append(r)
        by_right = [[] for _ in range(k)]
        for r, span in enumerate(spans):
            if span is not None:
                by_right[span[1]].append(r)
        self.l_lists = [deque() for _ in range(k)]
        for bucket in reversed(by_right):
            for r in bucket:
                self.l_lists[spans[r][0]].append(r)
        self.enqueued = [span is None for span in spans]

    def bfs(self, start: int) -> OverlapBfsTree:
        spans = self.spans
        enqueued = self.enqueued
        if enqueued[start]:
            raise ContractViolationError("start row is empty or already used")
        parent: dict = {start: None}
        depth = {start: 0}
        order = [start]
        enqueued[start] = True
        queue = deque([start])
        while queue:
            r = queue.popleft()
            j, k = spans[r]
            for i in range(j, k):
                lst = self.r_lists[i]
                while lst:
                    cand = lst[0]
                    if enqueued[cand]:
                        lst.popleft()
                    elif spans[cand][0] < j:
                        lst.popleft()
                        enqueued[cand] = True
                        parent[cand] = r
                        depth[cand] = depth[r] + 1
                        order.append(cand)
                        queue.append(cand)
                    else:
                        break
            for i in range(j + 1, k + 1):
                lst = self.l_lists[i]
                while lst:
                    cand = lst[0]
                    if enqueued[cand]:
                        lst.popleft()
                    elif spans[cand][1] > k:
                        lst.popleft()
                        enqueued[cand] = True
                        parent[cand] = r
                        depth[cand] = depth[r] + 1
                        order.append(cand)
                        queue.append(cand)
                    else:
                        break
        return OverlapBfsTree(start, parent, tuple(order), depth)


def overlap_bfs(m: SparseBinaryMatrix, ordering: ColumnOrdering, start: int) -> OverlapBfsTree:
    """BFS tree of the overlap component containing the start row."""
    return _EndpointLists(m, ordering).bfs(start)


def overlap_components(
    m: SparseBinaryMatrix, ordering: ColumnOrdering
) -> list[tuple[tuple[int, ...], OverlapBfsTree]]:
    """All overlap components with a BFS tree each; empty rows are
    singleton components with trivial trees."""
    state = _EndpointLists(m, ordering)
    out = []
    for r in range(m.num_rows):
        if state.spans[r] is None:
            out.append(((r,), OverlapBfsTree(r, {r: None}, (r,), {r: 0})))
        elif not state.enqueued[r]:
            tree = state.bfs(r)
            out.append((tree.order, tree))
    return out


def shortest_overlap_path(
    m: SparseBinaryMatrix, ordering: ColumnOrdering, a: int, b: int
) -> list[int]:
    """Shortest path from row a to row b in the overlap graph."""
    if a == b:
        return [a]
    tree = overlap_bfs(m, ordering, a)
    if b not in tree.parent:
        raise NotConnectedError(f"rows {a} and {b} are in different overlap components")
    path = [b]
    while path[-1] != a:
        path.append(tree.parent[path[-1]])
    path.reverse()
    return path


def venn_partition(
    m: SparseBinaryMatrix, ordering: ColumnOrdering, component: tuple[int, ...]
) -> VennPartition:
    """Constrained Venn classes of a connected overlap component.

    Class boundaries fall between consecutive positions p, p+1 of the
    component's span whenever p is a right endpoint or p+1 is a left
    endpoint of a member.
    """
    spans = row_endpoints(m, ordering, check=True).spans
    member_spans = [spans[r] for r in component]
    if any(s is None for s in member_spans):
        raise ContractViolationError("empty row in overlap component")
    lo = min(s[0] for s in member_spans)
    hi = max(s[1] for s in member_spans)
    is_left = [False] * (hi - lo + 1)
    is_right = [False] * (hi - lo + 1)
    covered = [0] * (hi - lo + 2)
    for left, right in member_spans:
        is_left[left - lo] = True
        is_right[right - lo] = True
        covered[left - lo] += 1
        covered[right - lo + 1] -= 1
    running = 0
    for p in range(hi - lo + 1):
        running += covered[p]
        if running == 0:
            raise ContractViolationError("overlap component span has a gap")
    classes: list[list[int]] = [[]]
    class_of_position = []
    perm = ordering.perm
    for p in range(lo, hi + 1):
        if p > lo and (is_right[p - 1 - lo] or is_left[p - lo]):
            classes.append([])
        classes[-1].append(perm[p])
        class_of_position.append(len(classes) - 1)
    in_span = {c for cls in classes for c in cls}
    unconstrained = tuple(c for c in range(m.num_cols) if c not in in_span)
    return VennPartition(
        tuple(tuple(cls) for cls in classes),
        unconstrained,
        lo,
        tuple(class_of_position),
    )


def _scan_config(
    vp: VennPartition, ordering: ColumnOrdering, z_cols: frozenset, first_value: int
) -> Configuration | None:
    """Scan construction shared by find_101 and find_010.

    first_value is the Z-value sought at the first column; the scan then
    looks for the complementary value in a later class, then first_value
    again in a still later class.
    """
    perm = ordering.perm
    lo = vp.span_start
    length = len(vp.class_of_position)

    def value(p):
        return 1 if perm[p] in z_cols else 0

    p = next((p for p in range(lo, lo + length) if value(p) == first_value), None)
    if p is None:
        return None
    q = next(
        (
            q
            for q in range(p + 1, lo + length)
            if vp.class_of_position[q - lo] != vp.class_of_position[p - lo]
            and value(q) == 1 - first_value
        ),
        None,
    )
    if q is None:
        return None
    r = next(
        (
            r
            for r in range(q + 1, lo + length)
            if vp.class_of_position[r - lo] != vp.class_of_position[q - lo]
            and value(r) == first_value
        ),
        None,
    )
    if r is None:
        return None
    kind = "1-0-1" if first_value == 1 else "0-1-0"
    return Configuration(kind, (perm[p], perm[q], perm[r]))


def find_101(vp: VennPartition, ordering: ColumnOrdering, z_cols) -> Configuration | None:
    return _scan_config(vp, ordering, frozenset(z_cols), 1)


def find_010(vp: VennPartition, ordering: ColumnOrdering, z_cols) -> Configuration | None:
    return _scan_config(vp, ordering, frozenset(z_cols), 0)


def suitable_pair(m: SparseBinaryMatrix) -> SuitableTriple:
    """A suitable pair (a, b) for one of the first five rows z.

    Requires that m lacks C1P and that every Tucker submatrix of m
    contains its first five rows; raises a contract violation otherwise.
    """
    if m.num_rows < 5:
        raise ContractViolationError("suitable_pair needs at least five rows")
    for zi in range(5):
        rest = [r for r in range(m.num_rows) if r != zi]
        sub = m.with_rows(rest)
        outcome = test_c1p(sub)
        if not outcome.ok:
            raise ContractViolationError(
                "rows excluding a candidate Z lack C1P; precondition violated"
            )
        ordering = outcome.ordering
        spans = row_endpoints(sub, ordering, check=False).spans
        z_cols = frozenset(m.rows[zi].cols)
        perm = ordering.perm
        for component, _tree in overlap_components(sub, ordering):
            a_best = None
            b_best = None
            for local in component:
                if not z_cols.intersection(sub.rows[local].cols):
                    continue
                left, right = spans[local]
                if a_best is None or right < spans[a_best][1]:
                    a_best = local
                if b_best is None or left > spans[b_best][0]:
                    b_best = local
            if a_best is None:
                continue
            gap_lo = spans[a_best][1] + 1
            gap_hi = spans[b_best][0]
            if any(perm[p] not in z_cols for p in range(gap_lo, gap_hi)):
                return SuitableTriple(rest[a_best], rest[b_best], zi)
    raise ContractViolationError("no suitable pair found for any of the first five rows")
