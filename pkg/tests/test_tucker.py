"""Tucker families, classification, and minimal submatrix extraction."""

import itertools
import random

import pytest

from tuckerlb.c1p import test_c1p as check_c1p
from tuckerlb.errors import ClassificationError, InputDomainError
from tuckerlb.matrix import from_lists, restrict
from tuckerlb.tucker import (
    TuckerCertificate,
    TuckerKind,
    classify_tucker,
    find_columns,
    format_tucker_certificate,
    gen_tucker,
    incomplete_column_triple,
    parse_tucker_certificate,
    select_tucker_columns,
    tucker_submatrix,
)
from tuckerlb.verify import brute_c1p, verify_tucker_certificate


def all_kinds(max_cols=9):
    kinds = []
    for k in range(3, max_cols + 1):
        kinds.append(TuckerKind("M_I", k))
    for k in range(4, max_cols + 1):
        kinds.append(TuckerKind("M_II", k))
    for k in range(3, max_cols):  # M_III(k) has k+1 columns
        kinds.append(TuckerKind("M_III", k))
    kinds.append(TuckerKind("M_IV", 4))
    kinds.append(TuckerKind("M_V", 4))
    return kinds


def test_kind_validation():
    with pytest.raises(InputDomainError):
        TuckerKind("M_I", 2)
    with pytest.raises(InputDomainError):
        TuckerKind("M_II", 3)
    with pytest.raises(InputDomainError):
        TuckerKind("M_IV", 5)
    with pytest.raises(InputDomainError):
        TuckerKind("M_X", 4)


def test_gen_tucker_shapes():
    assert gen_tucker(TuckerKind("M_I", 3)).num_cols == 3
    assert gen_tucker(TuckerKind("M_II", 5)).num_cols == 5
    assert gen_tucker(TuckerKind("M_III", 5)).num_cols == 6
    assert gen_tucker(TuckerKind("M_IV", 4)).num_cols == 6
    assert gen_tucker(TuckerKind("M_V", 4)).num_cols == 5


def test_classify_round_trip_under_permutation():
    rng = random.Random(31)
    for kind in all_kinds():
        base = gen_tucker(kind)
        for _ in range(3):
            rows = list(range(base.num_rows))
            cols = list(range(base.num_cols))
            rng.shuffle(rows)
            rng.shuffle(cols)
            inv = [0] * len(cols)
            for i, c in enumerate(cols):
                inv[c] = i
            shuffled = from_lists(
                [sorted(inv[c] for c in base.rows[r].cols) for r in rows],
                base.num_cols,
            )
            assert classify_tucker(shuffled) == kind


def test_classify_rejects_non_tucker():
    with pytest.raises(ClassificationError):
        classify_tucker(from_lists([[0, 1], [1, 2]], 3))


def test_incomplete_column_triples():
    # frozen values, validated against the completion construction in
    # the LB tests: deleting the single-1 simplicial rows at these
    # columns from the clique matrix leaves the canonical Tucker matrix
    assert incomplete_column_triple(TuckerKind("M_I", 3)) == (0, 1, 2)
    assert incomplete_column_triple(TuckerKind("M_II", 5)) == (0, 1, 2)
    assert incomplete_column_triple(TuckerKind("M_III", 5)) == (0, 4, 5)
    assert incomplete_column_triple(TuckerKind("M_IV", 4)) == (3, 4, 5)
    assert incomplete_column_triple(TuckerKind("M_V", 4)) == (0, 1, 3)
    with pytest.raises(InputDomainError):
        incomplete_column_triple(TuckerKind("M_I", 4))


def test_worked_example_column_selection():
    rows = [
        list(range(3, 16)),  # F
        [15, 16],            # G
        [12, 13, 14, 15],    # H
        [10, 11, 12],        # J
        [2, 3, 8, 10, 11],   # Z
    ]
    m = from_lists(rows, 17)
    cert = find_columns(m)
    assert cert.col_ids == (2, 4, 10, 12, 15, 16)
    assert cert.kind == TuckerKind("M_III", 5)
    assert cert.row_ids == (0, 1, 2, 3, 4)


def test_five_column_counterexample_needs_final_loop():
    # rows R1, R2, R3 plus Z with pinned columns 0, 2, 4: the first
    # sweep keeps column 2 and only the per-pin retest removes it.  The
    # input is deliberately outside find_columns's contract (its minimal
    # submatrix does not use all rows), so classification fails after
    # the correct selection is made.
    m = from_lists([[0, 1], [1, 2, 3], [3, 4], [0, 1, 4]], 5)
    assert select_tucker_columns(m) == (0, 1, 3, 4)
    with pytest.raises(ClassificationError):
        find_columns(m)


def test_tucker_submatrix_rejects_c1p_input():
    with pytest.raises(InputDomainError):
        tucker_submatrix(from_lists([[0, 1], [1, 2]], 3))


def test_tucker_submatrix_random_matrices():
    rng = random.Random(37)
    found = 0
    while found < 60:
        num_cols = rng.randrange(4, 9)
        num_rows = rng.randrange(3, 11)
        rows = [
            [c for c in range(num_cols) if rng.random() < 0.4]
            for _ in range(num_rows)
        ]
        m = from_lists(rows, num_cols)
        if check_c1p(m).ok:
            continue
        found += 1
        cert = tucker_submatrix(m)
        assert verify_tucker_certificate(m, cert)
        # row minimality: every proper subset of the chosen rows is C1P
        ridx = {r.original_id: i for i, r in enumerate(m.rows)}
        sub = restrict(m.with_rows([ridx[r] for r in cert.row_ids]),
                       [list(m.col_ids).index(c) for c in cert.col_ids])
        for drop in range(sub.num_rows):
            rest = sub.with_rows([j for j in range(sub.num_rows) if j != drop])
            assert brute_c1p(rest)


def test_tucker_submatrix_planted():
    rng = random.Random(41)
    from tuckerlb.generate import planted_tucker

    for kind in (TuckerKind("M_I", 5), TuckerKind("M_II", 6),
                 TuckerKind("M_III", 4), TuckerKind("M_IV", 4),
                 TuckerKind("M_V", 4)):
        m = planted_tucker(rng, kind, pad_rows=20, pad_cols=15)
        cert = tucker_submatrix(m)
        assert verify_tucker_certificate(m, cert)


def test_certificate_text_round_trip():
    cert = TuckerCertificate((4, 1, 7), (0, 3, 9), TuckerKind("M_I", 3))
    again = parse_tucker_certificate(format_tucker_certificate(cert))
    assert again == cert
    with pytest.raises(InputDomainError):
        parse_tucker_certificate("TUCKER nope\n")


def brute_force_is_tucker(m):
    """m fails C1P but every proper row/column deletion has C1P."""
    if brute_c1p(m):
        return False
    for i in range(m.num_rows):
        if not brute_c1p(m.with_rows([j for j in range(m.num_rows) if j != i])):
            return False
    for c in range(m.num_cols):
        if not brute_c1p(restrict(m, [d for d in range(m.num_cols) if d != c])):
            return False
    return True


def test_families_are_exactly_the_minimal_matrices_up_to_5_cols():
    # exhaustive cross-check on <= 4 rows x <= 5 columns: a matrix is
    # minimally non-C1P iff classify_tucker accepts it
    for num_rows, num_cols in ((3, 3), (4, 5)):
        rng = random.Random(num_rows * 100 + num_cols)
        for _ in range(400):
            rows = [
                [c for c in range(num_cols) if rng.random() < 0.5]
                for _ in range(num_rows)
            ]
            m = from_lists(rows, num_cols)
            want = brute_force_is_tucker(m)
            try:
                classify_tucker(m)
                got = True
            except ClassificationError:
                got = False
            assert got == want, (rows, num_cols)
