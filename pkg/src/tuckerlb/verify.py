"""Independent verifiers and brute-force oracles.

Nothing here calls the recognition pipeline it checks: C1P is decided by
permutation enumeration, canonical matching by isomorphism search, and
intervalness (for minimality checks) by the chordal + AT-free
characterization evaluated literally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .errors import InputDomainError
from .generate import gen_instances  # re-exported  # noqa: F401
from .graph import SimpleGraph, induced_subgraph
from .lb import LbCertificate, IntervalModel, gen_lb
from .matrix import SparseBinaryMatrix, restrict
from .tucker import TuckerCertificate, gen_tucker

_BRUTE_COL_CAP = 9


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _ok() -> Verdict:
    return Verdict(True)


def _fail(reason: str) -> Verdict:
    return Verdict(False, reason)


def brute_c1p(m: SparseBinaryMatrix) -> Verdict:
    """C1P by enumerating all column permutations (<= 9 columns)."""
    if m.num_cols > _BRUTE_COL_CAP:
        raise InputDomainError(
            f"brute_c1p is capped at {_BRUTE_COL_CAP} columns, got {m.num_cols}"
        )
    rows = [r.cols for r in m.rows if len(r.cols) >= 2]
    if not rows:
        return _ok()
    for perm in itertools.permutations(range(m.num_cols)):
        pos = [0] * m.num_cols
        for p, c in enumerate(perm):
            pos[c] = p
        if all(
            max(ps) - min(ps) + 1 == len(ps)
            for ps in ([pos[c] for c in cols] for cols in rows)
        ):
            return _ok()
    return _fail("no column permutation makes all rows consecutive")


def _c1p_verdict(m: SparseBinaryMatrix) -> bool:
    """C1P by brute force when feasible, else by PQ-tree."""
    if m.num_cols <= _BRUTE_COL_CAP:
        return brute_c1p(m).ok
    from .c1p import test_c1p

    return test_c1p(m).ok


def _bipartite_key(m: SparseBinaryMatrix):
    g = nx.Graph()
    for i in range(m.num_rows):
        g.add_node(("r", i), side=0)
    for c in range(m.num_cols):
        g.add_node(("c", c), side=1)
    for i, row in enumerate(m.rows):
        for c in row.cols:
            g.add_edge(("r", i), ("c", c))
    return g


def _matrices_isomorphic(a: SparseBinaryMatrix, b: SparseBinaryMatrix) -> bool:
    """Equality up to row and column permutation, by searching for an
    isomorphism of the side-labeled bipartite incidence graphs."""
    if (a.num_rows, a.num_cols) != (b.num_rows, b.num_cols):
        return False
    if sorted(len(r.cols) for r in a.rows) != sorted(len(r.cols) for r in b.rows):
        return False
    return nx.is_isomorphic(
        _bipartite_key(a),
        _bipartite_key(b),
        node_match=lambda x, y: x["side"] == y["side"],
    )


def _certificate_submatrix(m: SparseBinaryMatrix, cert: TuckerCertificate):
    ridx = {r.original_id: i for i, r in enumerate(m.rows)}
    cidx = {c: i for i, c in enumerate(m.col_ids)}
    if len(set(cert.row_ids)) != len(cert.row_ids):
        raise InputDomainError("duplicate row ids in certificate")
    if len(set(cert.col_ids)) != len(cert.col_ids):
        raise InputDomainError("duplicate column ids in certificate")
    try:
        rows = [ridx[r] for r in cert.row_ids]
        cols = [cidx[c] for c in cert.col_ids]
    except KeyError as e:
        raise InputDomainError(f"certificate id {e} not present in matrix") from e
    return restrict(m.with_rows(rows), cols)


def verify_tucker_certificate(m: SparseBinaryMatrix, cert: TuckerCertificate) -> Verdict:
    """The named submatrix fails C1P, is minimal with that property, and
    matches the canonical form of the claimed kind."""
    sub = _certificate_submatrix(m, cert)
    if _c1p_verdict(sub):
        return _fail("certificate submatrix has the consecutive-ones property")
    for i in range(sub.num_rows):
        rest = sub.with_rows([j for j in range(sub.num_rows) if j != i])
        if not _c1p_verdict(rest):
            return _fail(f"deleting certificate row {cert.row_ids[i]} keeps it non-C1P")
    for c in range(sub.num_cols):
        rest = restrict(sub, [d for d in range(sub.num_cols) if d != c])
        if not _c1p_verdict(rest):
            return _fail(
                f"deleting certificate column {cert.col_ids[c]} keeps it non-C1P"
            )
    if not _matrices_isomorphic(sub, gen_tucker(cert.kind)):
        return _fail(f"submatrix does not match canonical {cert.kind}")
    return _ok()


def is_asteroidal_triple(g: SimpleGraph, x: int, y: int, z: int) -> bool:
    """Pairwise connected by paths avoiding the third's closed
    neighborhood."""
    if len({x, y, z}) != 3:
        raise InputDomainError("asteroidal triple needs three distinct vertices")

    def connected_avoiding(a, b, w):
        blocked = set(g.adj[w]) | {w}
        if a in blocked or b in blocked:
            return False
        seen = {a}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                return True
            for u in g.adj[v]:
                if u not in seen and u not in blocked:
                    seen.add(u)
                    stack.append(u)
        return False

    return (
        connected_avoiding(y, z, x)
        and connected_avoiding(x, z, y)
        and connected_avoiding(x, y, z)
    )


def _interval_oracle(g: SimpleGraph) -> bool:
    """Interval test by the chordal + AT-free characterization; meant
    for small graphs (cubic in n)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges())
    if not nx.is_chordal(h):
        return False
    for x, y, z in itertools.combinations(range(g.num_vertices), 3):
        if g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z):
            continue
        if is_asteroidal_triple(g, x, y, z):
            return False
    return True


def verify_lb_certificate(
    g: SimpleGraph, cert: LbCertificate, minimality: bool = False
) -> Verdict:
    """The named vertices induce a graph isomorphic to the claimed LB
    family; with minimality=True (sensible for <= 12 vertices) also
    checks that every proper induced subgraph is an interval graph."""
    if len(set(cert.vertices)) != len(cert.vertices):
        return _fail("duplicate vertices in certificate")
    for v in cert.vertices:
        if not 0 <= v < g.num_vertices:
            raise InputDomainError(f"certificate vertex {v} out of range")
    sub, _ids = induced_subgraph(g, cert.vertices)
    canon = gen_lb(cert.kind)
    h = nx.Graph()
    h.add_nodes_from(range(sub.num_vertices))
    h.add_edges_from(sub.edges())
    c = nx.Graph()
    c.add_nodes_from(range(canon.num_vertices))
    c.add_edges_from(canon.edges())
    if not nx.is_isomorphic(h, c):
        return _fail(f"induced subgraph is not isomorphic to {cert.kind}")
    if minimality:
        if _interval_oracle(sub):
            return _fail("certificate subgraph is an interval graph")
        for v in range(sub.num_vertices):
            rest, _ = induced_subgraph(
                sub, [u for u in range(sub.num_vertices) if u != v]
            )
            if not _interval_oracle(rest):
                return _fail(
                    f"deleting certificate vertex {cert.vertices[v]} stays non-interval"
                )
    return _ok()


def verify_interval_model(g: SimpleGraph, model: IntervalModel) -> Verdict:
    if len(model.intervals) != g.num_vertices:
        return _fail("model must give one interval per vertex")
    iv = model.intervals
    for left, right in iv:
        if right < left:
            return _fail("interval with right endpoint before left")
    for u in range(g.num_vertices):
        for v in range(u + 1, g.num_vertices):
            meets = iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
            if meets != g.has_edge(u, v):
                want = "edge" if g.has_edge(u, v) else "non-edge"
                return _fail(f"intervals of {u} and {v} contradict the {want}")
    return _ok()
