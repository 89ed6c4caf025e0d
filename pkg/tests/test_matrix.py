"""Matrix container, restriction, endpoints, and text round trips."""

import pytest

from tuckerlb.errors import InputDomainError
from tuckerlb.matrix import (
    ColumnOrdering,
    format_matrix,
    from_lists,
    intersection_graph,
    matrix_size,
    parse_matrix,
    restrict,
    row_endpoints,
)


def test_from_lists_basic():
    m = from_lists([[0, 2], [1], []], 3)
    assert m.num_rows == 3
    assert m.num_cols == 3
    assert m.col_ids == (0, 1, 2)
    assert m.rows[0].cols == (0, 2)
    assert m.rows[0].original_id == 0
    assert m.rows[2].cols == ()
    assert matrix_size(m) == 3 + 3 + 3


def test_from_lists_rejects_bad_columns():
    with pytest.raises(InputDomainError):
        from_lists([[0, 3]], 3)
    with pytest.raises(InputDomainError):
        from_lists([[-1]], 3)


def test_from_lists_dedups_columns():
    m = from_lists([[1, 1, 0]], 3)
    assert m.rows[0].cols == (0, 1)


def test_restrict_keeps_original_ids():
    m = from_lists([[0, 1, 2], [2, 3], [1]], 4)
    sub = restrict(m, [1, 2])
    assert sub.num_cols == 2
    assert sub.col_ids == (1, 2)
    # local column indices, original column ids preserved separately
    assert [r.cols for r in sub.rows] == [(0, 1), (1,), (0,)]
    assert [r.original_id for r in sub.rows] == [0, 1, 2]


def test_with_rows_keeps_original_ids():
    m = from_lists([[0], [1], [2]], 3)
    sub = m.with_rows([2, 0])
    assert [r.original_id for r in sub.rows] == [2, 0]
    assert [r.cols for r in sub.rows] == [(2,), (0,)]


def test_row_endpoints_consecutive():
    m = from_lists([[0, 1], [1, 2], []], 3)
    ordering = ColumnOrdering((0, 1, 2))
    spans = row_endpoints(m, ordering, check=True).spans
    assert spans == ((0, 1), (1, 2), None)


def test_row_endpoints_check_rejects_gap():
    from tuckerlb.errors import ContractViolationError

    m = from_lists([[0, 2]], 3)
    ordering = ColumnOrdering((0, 1, 2))
    with pytest.raises(ContractViolationError):
        row_endpoints(m, ordering, check=True)


def test_intersection_graph():
    m = from_lists([[0, 1], [1, 2], [3]], 4)
    g = intersection_graph(m)
    assert g.num_vertices == 3
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 2)
    assert not g.has_edge(1, 2)


def test_matrix_text_round_trip():
    m = from_lists([[0, 2], [], [1]], 3)
    again = parse_matrix(format_matrix(m))
    assert again.num_cols == m.num_cols
    assert [r.cols for r in again.rows] == [r.cols for r in m.rows]


def test_parse_matrix_rejects_garbage():
    with pytest.raises(InputDomainError):
        parse_matrix("not a header\n")
