"""Sparse binary matrices with rows stored as sorted column-index tuples.

Rows carry a stable ``original_id`` and the matrix carries a ``col_ids``
side map so that restrictions and row reorderings can always report
row/column identifiers of the matrix they were derived from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContractViolationError, InputDomainError


@dataclass(frozen=True)
class Row:
    original_id: int
    cols: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.cols, self.cols[1:])):
            raise InputDomainError(
                f"row {self.original_id}: column indices must be strictly increasing"
            )

    def __len__(self):
        return len(self.cols)


@dataclass(frozen=True)
class SparseBinaryMatrix:
    num_cols: int
    rows: tuple[Row, ...]
    #: original identifier of each local column (identity unless restricted)
    col_ids: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.col_ids:
            object.__setattr__(self, "col_ids", tuple(range(self.num_cols)))
        if len(self.col_ids) != self.num_cols:
            raise InputDomainError("col_ids length must equal num_cols")
        seen = set()
        for row in self.rows:
            if row.cols and (row.cols[0] < 0 or row.cols[-1] >= self.num_cols):
                raise InputDomainError(
                    f"row {row.original_id}: column index out of range"
                )
            if row.original_id in seen:
                raise InputDomainError(f"duplicate row id {row.original_id}")
            seen.add(row.original_id)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def row_ids(self) -> tuple[int, ...]:
        return tuple(r.original_id for r in self.rows)

    def with_rows(self, indices: Sequence[int]) -> "SparseBinaryMatrix":
        """Matrix consisting of the given rows (by index), in the given order."""
        return SparseBinaryMatrix(
            self.num_cols, tuple(self.rows[i] for i in indices), self.col_ids
        )


def from_lists(
    row_lists: Iterable[Iterable[int]],
    num_cols: int,
    row_ids: Sequence[int] | None = None,
) -> SparseBinaryMatrix:
    rows = []
    for i, cols in enumerate(row_lists):
        rid = row_ids[i] if row_ids is not None else i
        rows.append(Row(rid, tuple(sorted(set(cols)))))
    return SparseBinaryMatrix(num_cols, tuple(rows))


@dataclass(frozen=True)
class ColumnOrdering:
    """A permutation of the local column indices, leftmost first."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InputDomainError("perm must be a permutation of 0..num_cols-1")

    def positions(self) -> list[int]:
        """Inverse map: positions()[col] is the position of col in the order."""
        pos = [0] * len(self.perm)
        for p, c in enumerate(self.perm):
            pos[c] = p
        return pos


@dataclass(frozen=True)
class RowEndpoints:
    """Per-row (left, right) positions under some ordering; None for empty rows."""

    spans: tuple[tuple[int, int] | None, ...]


def restrict(m: SparseBinaryMatrix, cols: Iterable[int]) -> SparseBinaryMatrix:
    """Restriction of m to a column subset, columns relabeled by rank.

    Rows keep their original ids (empty rows are retained); the returned
    matrix's col_ids map local columns back to m's original column ids.
    """
    chosen = sorted(set(cols))
    if chosen and (chosen[0] < 0 or chosen[-1] >= m.num_cols):
        raise InputDomainError("restriction column index out of range")
    rank = {c: i for i, c in enumerate(chosen)}
    keep = set(chosen)
    rows = tuple(
        Row(r.original_id, tuple(rank[c] for c in r.cols if c in keep)) for r in m.rows
    )
    return SparseBinaryMatrix(len(chosen), rows, tuple(m.col_ids[c] for c in chosen))


def matrix_size(m: SparseBinaryMatrix) -> int:
    """Rows + columns + number of ones."""
    return m.num_rows + m.num_cols + sum(len(r.cols) for r in m.rows)


def row_endpoints(
    m: SparseBinaryMatrix, ordering: ColumnOrdering, check: bool = True
) -> RowEndpoints:
    """Leftmost/rightmost positions of each row under the ordering.

    With check=True (the default outside hot loops), raises if some row is
    not consecutive under the ordering.
    """
    if len(ordering.perm) != m.num_cols:
        raise InputDomainError("ordering size does not match matrix")
    pos = ordering.positions()
    spans: list[tuple[int, int] | None] = []
    for r in m.rows:
        if not r.cols:
            spans.append(None)
            continue
        ps = [pos[c] for c in r.cols]
        left, right = min(ps), max(ps)
        if check and right - left + 1 != len(ps):
            raise ContractViolationError(
                f"row {r.original_id} is not consecutive under the given ordering"
            )
        spans.append((left, right))
    return RowEndpoints(tuple(spans))


def intersection_graph(m: SparseBinaryMatrix):
    """Graph with a vertex per row and an edge where two rows intersect."""
    from .graph import SimpleGraph, from_edges

    by_col: dict[int, list[int]] = {}
    for i, r in enumerate(m.rows):
        for c in r.cols:
            by_col.setdefault(c, []).append(i)
    edges = set()
    for members in by_col.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.add((members[a], members[b]))
    return from_edges(m.num_rows, edges)


# --- text format: "rows cols" header, then one line of column indices per row ---

def format_matrix(m: SparseBinaryMatrix) -> str:
    lines = [f"{m.num_rows} {m.num_cols}"]
    for r in m.rows:
        lines.append(" ".join(str(c) for c in r.cols))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SparseBinaryMatrix:
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise InputDomainError("missing matrix header line")
    try:
        n, mcols = map(int, lines[0].split())
    except ValueError as e:
        raise InputDomainError(f"bad matrix header: {lines[0]!r}") from e
    if n < 0 or mcols < 0 or len(lines) < n + 1:
        raise InputDomainError("matrix file truncated")
    rows = []
    for i in range(1, n + 1):
        try:
            cols = tuple(sorted(int(t) for t in lines[i].split()))
        except ValueError as e:
            raise InputDomainError(f"bad row line: {lines[i]!r}") from e
        rows.append(Row(i - 1, cols))
    return SparseBinaryMatrix(mcols, tuple(rows))
