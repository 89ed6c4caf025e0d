"""Tucker forbidden-submatrix generators, classification, and extraction.

The five canonical families are indexed by their row count k.  The fixed
bit patterns below were validated against a brute-force minimality oracle
(fails C1P, every single row or column deletion restores C1P) for all
parameters with at most eight columns; the test suite repeats that check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .c1p import max_c1p_prefix, test_c1p
from .errors import ClassificationError, ContractViolationError, InputDomainError
from .matrix import SparseBinaryMatrix, from_lists, restrict
from .overlap import (
    find_010,
    find_101,
    shortest_overlap_path,
    suitable_pair,
    venn_partition,
)

_FAMILIES = ("M_I", "M_II", "M_III", "M_IV", "M_V")


@dataclass(frozen=True)
class TuckerKind:
    family: str
    k: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InputDomainError(f"unknown Tucker family {self.family!r}")
        lo = {"M_I": 3, "M_II": 4, "M_III": 3, "M_IV": 4, "M_V": 4}[self.family]
        if self.k < lo:
            raise InputDomainError(f"{self.family} requires k >= {lo}, got {self.k}")
        if self.family in ("M_IV", "M_V") and self.k != 4:
            raise InputDomainError(f"{self.family} has exactly 4 rows")

    def __str__(self):
        return f"{self.family}({self.k})"


@dataclass(frozen=True)
class TuckerCertificate:
    row_ids: tuple[int, ...]
    col_ids: tuple[int, ...]
    kind: TuckerKind


@dataclass(frozen=True)
class DiffCollection:
    """The sets R_i \\ R_{i+1}, R_i & R_{i+1}, R_{i+1} \\ R_i along an
    overlap path, with per-column membership lists and live cardinality
    counters over a shrinking column set."""

    sets: tuple[tuple[int, ...], ...]
    col_members: dict
    counters: list


def _family_rows(kind: TuckerKind) -> tuple[list[set], int]:
    k = kind.k
    if kind.family == "M_I":
        return [{i, (i + 1) % k} for i in range(k)], k
    if kind.family == "M_II":
        rows = [{0, 1} | set(range(3, k)), {0, 2} | set(range(3, k))]
        rows += [{j - 1, j + 1} for j in range(2, k - 1)]
        rows += [{k - 2, k - 1}]
        return rows, k
    if kind.family == "M_III":
        rows = [{i, i + 1} for i in range(k - 1)]
        rows += [set(range(1, k - 1)) | {k}]
        return rows, k + 1
    if kind.family == "M_IV":
        return [{0, 1, 2}, {0, 3}, {1, 4}, {2, 5}], 6
    return [{0, 2, 4}, {1, 2, 3, 4}, {1, 2}, {3, 4}], 5


def gen_tucker(kind: TuckerKind) -> SparseBinaryMatrix:
    rows, num_cols = _family_rows(kind)
    return from_lists(rows, num_cols)


#: columns whose completion with a simplicial row yields an LB graph;
#: unique per family, determined by the completion-validation oracle
def incomplete_column_triple(kind: TuckerKind) -> tuple[int, int, int]:
    if kind.family == "M_I":
        if kind.k != 3:
            raise InputDomainError("M_I(k) for k >= 4 has no completion")
        return (0, 1, 2)
    if kind.family == "M_II":
        return (0, 1, 2)
    if kind.family == "M_III":
        return (0, kind.k - 1, kind.k)
    if kind.family == "M_IV":
        return (3, 4, 5)
    return (0, 1, 3)


def _column_keys(row_sets: list, num_cols: int) -> dict:
    """Map from frozenset-of-row-indices to the columns having exactly
    that membership pattern."""
    keys = {}
    for c in range(num_cols):
        key = frozenset(i for i, r in enumerate(row_sets) if c in r)
        keys.setdefault(key, []).append(c)
    return keys


def _overlap_cycle_order(row_sets: list) -> list[int] | None:
    """Order of rows along an overlap cycle, or None if the overlap
    graph is not a single simple cycle."""
    n = len(row_sets)
    nbrs = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = row_sets[i], row_sets[j]
            if a & b and not a <= b and not b <= a:
                nbrs[i].append(j)
                nbrs[j].append(i)
    if any(len(x) != 2 for x in nbrs):
        return None
    order = [0, nbrs[0][0]]
    while len(order) < n:
        a, b = nbrs[order[-1]]
        nxt = b if a == order[-2] else a
        if nxt == order[0]:
            return None
        order.append(nxt)
    if order[0] not in nbrs[order[-1]]:
        return None
    return order


def _try_row_bijection(inst_rows, canon_rows, num_cols, canon_cols, assignment):
    """Column map induced by a candidate row bijection, or None.

    assignment[i] = canonical row index for instance row i.  Works
    because no minimal matrix has two equal columns, so the columns are
    matched by their row-membership pattern.
    """
    inst_keys = {}
    for c in range(num_cols):
        key = frozenset(assignment[i] for i, r in enumerate(inst_rows) if c in r)
        if key in inst_keys:
            return None
        inst_keys[key] = c
    canon_keys = {}
    for c in range(canon_cols):
        key = frozenset(i for i, r in enumerate(canon_rows) if c in r)
        canon_keys[key] = c
    if set(inst_keys) != set(canon_keys):
        return None
    col_map = [0] * num_cols
    for key, c in inst_keys.items():
        col_map[c] = canon_keys[key]
    return col_map


def match_canonical(m: SparseBinaryMatrix):
    """(kind, row_map, col_map) such that instance row i plays the role
    of canonical row row_map[i] and instance column c plays canonical
    column col_map[c].  Raises ClassificationError if m matches no
    canonical family."""
    inst_rows = [set(r.cols) for r in m.rows]
    n = m.num_rows
    sizes = tuple(sorted(len(r) for r in inst_rows))
    candidates = []
    if n >= 3 and m.num_cols == n:
        candidates.append(TuckerKind("M_I", n))
        if n >= 4:
            candidates.append(TuckerKind("M_II", n))
    if n >= 3 and m.num_cols == n + 1:
        candidates.append(TuckerKind("M_III", n))
    if n == 4 and m.num_cols == 6:
        candidates.append(TuckerKind("M_IV", 4))
    if n == 4 and m.num_cols == 5:
        candidates.append(TuckerKind("M_V", 4))
    for kind in candidates:
        canon_rows, canon_cols = _family_rows(kind)
        if tuple(sorted(len(r) for r in canon_rows)) != sizes:
            continue
        if n <= 4:
            perms = itertools.permutations(range(n))
        else:
            inst_cycle = _overlap_cycle_order(inst_rows)
            canon_cycle = _overlap_cycle_order(canon_rows)
            if inst_cycle is None or canon_cycle is None:
                continue
            perms = []
            for shift in range(n):
                for direction in (1, -1):
                    assignment = [0] * n
                    for pos in range(n):
                        assignment[inst_cycle[pos]] = canon_cycle[
                            (shift + direction * pos) % n
                        ]
                    perms.append(tuple(assignment))
            for assignment in perms:
                col_map = _try_row_bijection(
                    inst_rows, canon_rows, m.num_cols, canon_cols, assignment
                )
                if col_map is not None:
                    return kind, list(assignment), col_map
            continue
        for perm in perms:
            assignment = list(perm)
            col_map = _try_row_bijection(
                inst_rows, canon_rows, m.num_cols, canon_cols, assignment
            )
            if col_map is not None:
                return kind, assignment, col_map
    raise ClassificationError("matrix matches no canonical Tucker family")


def classify_tucker(m: SparseBinaryMatrix) -> TuckerKind:
    kind, _rows, _cols = match_canonical(m)
    return kind


def tucker_rows(m: SparseBinaryMatrix, k: int) -> SparseBinaryMatrix:
    """Row-subset reordering of m that still lacks C1P.

    If the result has at most k rows, they are the rows of every Tucker
    submatrix of it; otherwise every Tucker submatrix of the result
    contains its first k+1 rows.  Runs k+1 prefix iterations, stopping
    early once all remaining rows are pinned.
    """
    if k < 1:
        raise InputDomainError("k must be positive")
    current = m
    for i in range(1, k + 2):
        if current.num_rows < i:
            break
        pr = max_c1p_prefix(current)
        if pr.prefix_len >= current.num_rows:
            raise ContractViolationError("matrix has the consecutive-ones property")
        z = pr.prefix_len
        current = current.with_rows([z] + list(range(z)))
    return current


def find_rows(m: SparseBinaryMatrix) -> SparseBinaryMatrix:
    """Minimal row set lacking C1P, ordered so that all rows except the
    last form a chordless overlap path."""
    triple = suitable_pair(m)
    rest = [r for r in range(m.num_rows) if r != triple.z]
    sub = m.with_rows(rest)
    ordering = test_c1p(sub).ordering
    if ordering is None:
        raise ContractViolationError("rows excluding Z lack C1P")
    a_local = rest.index(triple.a)
    b_local = rest.index(triple.b)
    path = shortest_overlap_path(sub, ordering, a_local, b_local)
    path_global = [rest[r] for r in path]

    with_z = m.with_rows([triple.z] + path_global)
    j = max_c1p_prefix(with_z).prefix_len
    if j >= with_z.num_rows:
        raise ContractViolationError("path plus Z unexpectedly has C1P")
    prefix = path_global[:j]

    reversed_with_z = m.with_rows([triple.z] + prefix[::-1])
    p2 = max_c1p_prefix(reversed_with_z).prefix_len
    if p2 >= reversed_with_z.num_rows:
        raise ContractViolationError("reversed prefix plus Z unexpectedly has C1P")
    suffix = prefix[len(prefix) - p2:]
    return m.with_rows(suffix + [triple.z])


def diff_collection(m: SparseBinaryMatrix, path_len: int | None = None) -> DiffCollection:
    """The collection of difference/intersection sets along the path
    formed by the first path_len rows (default: all rows)."""
    if path_len is None:
        path_len = m.num_rows
    sets = []
    for i in range(path_len - 1):
        a = set(m.rows[i].cols)
        b = set(m.rows[i + 1].cols)
        if not (a & b) or a <= b or b <= a:
            raise ContractViolationError(
                f"consecutive path rows {i} and {i + 1} do not overlap"
            )
        sets.extend([tuple(sorted(a - b)), tuple(sorted(a & b)), tuple(sorted(b - a))])
    col_members: dict = {}
    for idx, s in enumerate(sets):
        for c in s:
            col_members.setdefault(c, []).append(idx)
    counters = [len(s) for s in sets]
    return DiffCollection(tuple(sets), col_members, counters)


def _restricted_config(m, path_len, z_cols, cols, want):
    """Re-test configuration existence on the restriction to cols."""
    sub = restrict(m, cols)
    path = sub.with_rows(range(path_len))
    ordering = test_c1p(path).ordering
    if ordering is None:
        raise ContractViolationError("restricted path lost C1P")
    vp = venn_partition(path, ordering, tuple(range(path_len)))
    back = {orig: local for local, orig in enumerate(sub.col_ids)}
    z_local = frozenset(back[c] for c in z_cols if c in back)
    finder = find_101 if want == "1-0-1" else find_010
    return finder(vp, ordering, z_local)


def select_tucker_columns(m: SparseBinaryMatrix) -> tuple[int, ...]:
    """Column-selection phase of find_columns: the minimal column set
    keeping the path's overlap graph connected while preserving a
    configuration, found by the two-phase deletion sweep."""
    h = m.num_rows - 1
    path = m.with_rows(range(h))
    z_cols = set(m.rows[h].cols)
    outcome = test_c1p(path)
    if outcome.ordering is None:
        raise ContractViolationError("path rows lack C1P")
    ordering = outcome.ordering
    vp = venn_partition(path, ordering, tuple(range(h)))
    dc = diff_collection(m, h)

    config = find_101(vp, ordering, frozenset(z_cols))
    if config is not None:
        c = {col for cls in vp.constrained for col in cls}
    else:
        config = find_010(vp, ordering, frozenset(z_cols))
        if config is None:
            raise ContractViolationError("no configuration; matrix may have C1P")
        extra = [col for col in vp.unconstrained if col in z_cols]
        if not extra:
            raise ContractViolationError(
                "0-1-0 configuration without a 1 of Z outside the component"
            )
        c_prime = min(extra)
        c = {col for cls in vp.constrained for col in cls} | {c_prime}
    pins = set(config.cols)

    def sole_in_some_member(col):
        return any(dc.counters[idx] == 1 for idx in dc.col_members.get(col, ()))

    def remove(col):
        c.discard(col)
        for idx in dc.col_members.get(col, ()):
            dc.counters[idx] -= 1

    for cls in vp.constrained:
        for col in cls:
            if col not in pins and not sole_in_some_member(col):
                remove(col)

    for col in config.cols:
        if not sole_in_some_member(col):
            trial = sorted(c - {col})
            try:
                found = _restricted_config(m, h, z_cols, trial, config.kind)
            except ContractViolationError:
                # deletion broke the path structure; the pin stays
                found = None
            if found is not None:
                remove(col)

    return tuple(sorted(c))


def find_columns(m: SparseBinaryMatrix) -> TuckerCertificate:
    """Certificate for the Tucker submatrix on the selected columns."""
    chosen = select_tucker_columns(m)
    sub = restrict(m, chosen)
    kind, _rmap, _cmap = match_canonical(sub)
    return TuckerCertificate(
        tuple(r.original_id for r in m.rows),
        tuple(m.col_ids[col] for col in chosen),
        kind,
    )


def _small_case(m: SparseBinaryMatrix) -> TuckerCertificate:
    """Tucker matrix on all rows of m, for matrices with at most 4 rows.

    Tries every row ordering against every canonical family with that
    many rows, looking for distinct columns of m realizing each canonical
    column vector.
    """
    n = m.num_rows
    kinds = []
    if n == 3:
        kinds = [TuckerKind("M_I", 3), TuckerKind("M_III", 3)]
    elif n == 4:
        kinds = [
            TuckerKind("M_I", 4),
            TuckerKind("M_II", 4),
            TuckerKind("M_III", 4),
            TuckerKind("M_IV", 4),
            TuckerKind("M_V", 4),
        ]
    col_sets = [set(r.cols) for r in m.rows]
    for kind in kinds:
        canon_rows, canon_cols = _family_rows(kind)
        needed = []
        for c in range(canon_cols):
            needed.append(frozenset(i for i, r in enumerate(canon_rows) if c in r))
        for perm in itertools.permutations(range(n)):
            # perm[i] = instance row playing canonical row i
            chosen = []
            used = set()
            ok = True
            for vec in needed:
                found = None
                for col in range(m.num_cols):
                    if col in used:
                        continue
                    if all(
                        (col in col_sets[perm[i]]) == (i in vec) for i in range(n)
                    ):
                        found = col
                        break
                if found is None:
                    ok = False
                    break
                used.add(found)
                chosen.append(found)
            if ok:
                return TuckerCertificate(
                    tuple(r.original_id for r in m.rows),
                    tuple(m.col_ids[col] for col in sorted(chosen)),
                    kind,
                )
    raise ContractViolationError("no Tucker pattern found among <=4 rows")


def tucker_submatrix(m: SparseBinaryMatrix) -> TuckerCertificate:
    """Certificate naming a minimal Tucker submatrix of m.

    The certificate's rows are a minimal row set of m containing a Tucker
    submatrix.  Raises an input-domain error when m has C1P.
    """
    if test_c1p(m).ok:
        raise InputDomainError("matrix has the consecutive-ones property")
    reduced = tucker_rows(m, 4)
    if reduced.num_rows <= 4:
        return _small_case(reduced)
    rows = find_rows(reduced)
    return find_columns(rows)


# --- certificate text format ---

def format_tucker_certificate(cert: TuckerCertificate) -> str:
    lines = [
        f"TUCKER {cert.kind.family} {cert.kind.k}",
        " ".join(str(r) for r in cert.row_ids),
        " ".join(str(c) for c in cert.col_ids),
    ]
    return "\n".join(lines) + "\n"


def parse_tucker_certificate(text: str) -> TuckerCertificate:
    lines = [ln for ln in text.split("\n")]
    if len(lines) < 3 or not lines[0].startswith("TUCKER"):
        raise InputDomainError("malformed Tucker certificate")
    head = lines[0].split()
    if len(head) != 3:
        raise InputDomainError("malformed Tucker certificate header")
    try:
        kind = TuckerKind(head[1], int(head[2]))
        row_ids = tuple(int(t) for t in lines[1].split())
        col_ids = tuple(int(t) for t in lines[2].split())
    except ValueError as e:
        raise InputDomainError(f"bad certificate field: {e}") from e
    return TuckerCertificate(row_ids, col_ids, kind)
