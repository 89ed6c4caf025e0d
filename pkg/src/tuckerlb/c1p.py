"""Consecutive-ones testing and the maximal-C1P-prefix primitive."""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import ColumnOrdering, SparseBinaryMatrix
from .pqtree import PQTree


@dataclass(frozen=True)
class C1pOutcome:
    ordering: ColumnOrdering | None

    @property
    def ok(self) -> bool:
        return self.ordering is not None


@dataclass(frozen=True)
class PrefixResult:
    prefix_len: int
    ordering: ColumnOrdering


def _ordering_from_tree(tree: PQTree, num_cols: int) -> ColumnOrdering:
    if num_cols == 0:
        return ColumnOrdering(())
    return ColumnOrdering(tuple(tree.frontier()))


def test_c1p(m: SparseBinaryMatrix) -> C1pOutcome:
    """A column ordering making every row consecutive, or failure."""
    tree = PQTree(m.num_cols)
    for row in m.rows:
        if not tree.reduce(row.cols):
            return C1pOutcome(None)
    return C1pOutcome(_ordering_from_tree(tree, m.num_cols))


def max_c1p_prefix(m: SparseBinaryMatrix) -> PrefixResult:
    """Longest prefix of the rows that has the consecutive-ones property.

    The returned ordering is valid for that prefix.  If prefix_len is
    less than the number of rows, adding the next row breaks C1P.
    """
    tree = PQTree(m.num_cols)
    for i, row in enumerate(m.rows):
        if not tree.reduce(row.cols):
            # the failed reduction left the tree unusable; rebuild on the
            # prefix, which is guaranteed to succeed
            tree = PQTree(m.num_cols)
            for prev in m.rows[:i]:
                tree.reduce(prev.cols)
            return PrefixResult(i, _ordering_from_tree(tree, m.num_cols))
    return PrefixResult(m.num_rows, _ordering_from_tree(tree, m.num_cols))
