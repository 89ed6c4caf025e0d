"""Interval-graph recognition with Lekkerkerker-Boland certificates.

Non-chordal graphs yield a chordless cycle (family G_III).  Chordal
non-interval graphs yield a Tucker submatrix of the clique matrix,
completed by three simplicial vertices into an induced LB subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .c1p import test_c1p
from .chordal import CliqueMatrixBundle, chordless_cycle, clique_matrix, is_chordal
from .errors import (
    ClassificationError,
    InputDomainError,
    InvariantViolationError,
)
from .graph import SimpleGraph, from_edges, induced_subgraph
from .matrix import restrict, row_endpoints
from .tucker import (
    TuckerCertificate,
    gen_tucker,
    incomplete_column_triple,
    match_canonical,
    tucker_submatrix,
)

_LB_FAMILIES = ("G_I", "G_II", "G_III", "G_IV", "G_V")


@dataclass(frozen=True)
class LbKind:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in _LB_FAMILIES:
            raise InputDomainError(f"unknown LB family {self.family!r}")
        if self.family in ("G_I", "G_II"):
            if self.n != 7:
                raise InputDomainError(f"{self.family} has exactly 7 vertices")
        elif self.family == "G_III":
            if self.n < 4:
                raise InputDomainError("G_III requires n >= 4")
        elif self.n < 6:
            raise InputDomainError(f"{self.family} requires n >= 6")

    def __str__(self):
        return f"{self.family}({self.n})"


@dataclass(frozen=True)
class LbCertificate:
    vertices: tuple[int, ...]
    kind: LbKind


@dataclass(frozen=True)
class IncompleteColumns:
    cols: tuple[int, int, int]


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer interval per vertex; u, v adjacent iff the
    intervals intersect."""

    intervals: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RecognitionResult:
    model: IntervalModel | None
    certificate: LbCertificate | None

    @property
    def is_interval(self) -> bool:
        return self.model is not None


def _completed_graph(tucker_kind) -> SimpleGraph:
    """Intersection graph of a canonical Tucker matrix plus one
    simplicial single-1 row per incomplete column."""
    base = gen_tucker(tucker_kind)
    triple = incomplete_column_triple(tucker_kind)
    rows = [set(r.cols) for r in base.rows] + [{c} for c in triple]
    by_col: dict[int, list[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            by_col.setdefault(c, []).append(i)
    edges = set()
    for members in by_col.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.add((members[a], members[b]))
    return from_edges(len(rows), edges)


def gen_lb(kind: LbKind) -> SimpleGraph:
    """Canonical LB graph; the Tucker rows come first, then the three
    simplicial completion vertices (G_III is a plain cycle)."""
    from .tucker import TuckerKind

    if kind.family == "G_III":
        n = kind.n
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind.family == "G_I":
        return _completed_graph(TuckerKind("M_IV", 4))
    if kind.family == "G_II":
        return _completed_graph(TuckerKind("M_V", 4))
    if kind.family == "G_IV":
        return _completed_graph(TuckerKind("M_III", kind.n - 3))
    if kind.n == 6:
        return _completed_graph(TuckerKind("M_I", 3))
    return _completed_graph(TuckerKind("M_II", kind.n - 3))


def _lb_kind_of_tucker(tucker_kind) -> LbKind:
    if tucker_kind.family == "M_IV":
        return LbKind("G_I", 7)
    if tucker_kind.family == "M_V":
        return LbKind("G_II", 7)
    if tucker_kind.family == "M_III":
        return LbKind("G_IV", tucker_kind.k + 3)
    if tucker_kind.family == "M_I":
        if tucker_kind.k != 3:
            raise InputDomainError("M_I(k), k >= 4, has no LB completion")
        return LbKind("G_V", 6)
    return LbKind("G_V", tucker_kind.k + 3)


def incomplete_columns(m, cert: TuckerCertificate) -> IncompleteColumns:
    """The three host-matrix column ids from which simplicial rows were
    removed, for the Tucker submatrix named by the certificate in m."""
    ridx = {r.original_id: i for i, r in enumerate(m.rows)}
    cidx = {c: i for i, c in enumerate(m.col_ids)}
    sub = restrict(
        m.with_rows([ridx[r] for r in cert.row_ids]),
        [cidx[c] for c in cert.col_ids],
    )
    kind, _rmap, cmap = match_canonical(sub)
    if kind != cert.kind:
        raise ClassificationError("certificate kind does not match the submatrix")
    triple = incomplete_column_triple(kind)
    back = {}
    for local, canon in enumerate(cmap):
        back[canon] = sub.col_ids[local]
    return IncompleteColumns(tuple(back[c] for c in triple))


def complete_tucker(
    bundle: CliqueMatrixBundle, cert: TuckerCertificate, ic: IncompleteColumns
) -> tuple[int, int, int]:
    """One simplicial vertex per incomplete column: a vertex whose clique
    memberships meet the certificate's columns exactly in that column.
    Smallest vertex id wins; the three are pairwise nonadjacent.
    """
    m = bundle.matrix
    cert_cols = set(cert.col_ids)
    row_of = {v: i for i, v in enumerate(bundle.vertex_of_row)}
    cert_rows = {
        v: set(m.rows[row_of[v]].cols) for v in cert.row_ids
    }
    chosen = []
    for target in ic.cols:
        in_target = set(bundle.clique_members[target])
        best = None
        for i, row in enumerate(m.rows):
            hits = [c for c in row.cols if c in cert_cols]
            if hits != [target]:
                continue
            # the candidate must not touch any certificate vertex outside
            # the target clique, not even through a non-certificate clique
            cand = set(row.cols)
            if any(
                v not in in_target and cand & cols
                for v, cols in cert_rows.items()
            ):
                continue
            best = bundle.vertex_of_row[i]
            break
        if best is None:
            raise InvariantViolationError(
                f"no completing vertex for column {target}; "
                "certificate row set is not minimal"
            )
        chosen.append(best)
    x, y, z = chosen
    cliques = [set(m.rows[row_of[v]].cols) for v in chosen]
    if cliques[0] & cliques[1] or cliques[0] & cliques[2] or cliques[1] & cliques[2]:
        raise InvariantViolationError("completion vertices are adjacent")
    return (x, y, z)


def classify_lb(g: SimpleGraph, vertices) -> LbKind:
    """Family and size of the LB graph induced by the vertex set."""
    sub, _ids = induced_subgraph(g, vertices)
    n = sub.num_vertices
    candidates = []
    if n == 7:
        candidates += [LbKind("G_I", 7), LbKind("G_II", 7)]
    if n >= 4:
        candidates.append(LbKind("G_III", n))
    if n >= 6:
        candidates += [LbKind("G_IV", n), LbKind("G_V", n)]
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(sub.edges())
    for kind in candidates:
        canon = gen_lb(kind)
        c = nx.Graph()
        c.add_nodes_from(range(canon.num_vertices))
        c.add_edges_from(canon.edges())
        if nx.is_isomorphic(h, c):
            return kind
    raise ClassificationError("induced subgraph matches no LB family")


def find_lb_subgraph(g: SimpleGraph) -> LbCertificate:
    """Vertices of g inducing a minimal non-interval (LB) subgraph."""
    chordal, peo = is_chordal(g)
    if not chordal:
        cycle = chordless_cycle(g)
        return LbCertificate(tuple(cycle), LbKind("G_III", len(cycle)))
    bundle = clique_matrix(g, peo)
    if test_c1p(bundle.matrix).ok:
        raise InputDomainError("graph is an interval graph")
    cert = tucker_submatrix(bundle.matrix)
    ic = incomplete_columns(bundle.matrix, cert)
    x, y, z = complete_tucker(bundle, cert, ic)
    vertices = tuple(cert.row_ids) + (x, y, z)
    return LbCertificate(vertices, _lb_kind_of_tucker(cert.kind))


def interval_model(g: SimpleGraph) -> IntervalModel | None:
    """Interval model from the clique matrix's C1P ordering, or None."""
    chordal, peo = is_chordal(g)
    if not chordal:
        return None
    bundle = clique_matrix(g, peo)
    outcome = test_c1p(bundle.matrix)
    if outcome.ordering is None:
        return None
    spans = row_endpoints(bundle.matrix, outcome.ordering, check=True).spans
    intervals = []
    for i in range(g.num_vertices):
        span = spans[i]
        if span is None:
            raise InvariantViolationError(f"vertex {i} lies in no clique")
        intervals.append(span)
    return IntervalModel(tuple(intervals))


def recognize_interval(g: SimpleGraph) -> RecognitionResult:
    model = interval_model(g)
    if model is not None:
        return RecognitionResult(model, None)
    return RecognitionResult(None, find_lb_subgraph(g))


# --- text formats ---

def format_lb_certificate(cert: LbCertificate) -> str:
    lines = [
        f"LB {cert.kind.family} {cert.kind.n}",
        " ".join(str(v) for v in cert.vertices),
    ]
    return "\n".join(lines) + "\n"


def parse_lb_certificate(text: str) -> LbCertificate:
    lines = text.split("\n")
    if len(lines) < 2 or not lines[0].startswith("LB"):
        raise InputDomainError("malformed LB certificate")
    head = lines[0].split()
    if len(head) != 3:
        raise InputDomainError("malformed LB certificate header")
    try:
        kind = LbKind(head[1], int(head[2]))
        vertices = tuple(int(t) for t in lines[1].split())
    except ValueError as e:
        raise InputDomainError(f"bad certificate field: {e}") from e
    return LbCertificate(vertices, kind)


def format_interval_model(model: IntervalModel) -> str:
    lines = [
        f"{v} {left} {right}" for v, (left, right) in enumerate(model.intervals)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_interval_model(text: str) -> IntervalModel:
    entries = {}
    for line in text.split("\n"):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InputDomainError(f"bad interval line: {line!r}")
        try:
            v, left, right = (int(t) for t in parts)
        except ValueError as e:
            raise InputDomainError(f"bad interval line: {line!r}") from e
        if v in entries:
            raise InputDomainError(f"duplicate vertex {v}")
        entries[v] = (left, right)
    if sorted(entries) != list(range(len(entries))):
        raise InputDomainError("interval model must cover vertices 0..n-1")
    return IntervalModel(tuple(entries[v] for v in range(len(entries))))
