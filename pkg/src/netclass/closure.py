"""Closure numbers: the smallest c making a graph c-closed or weakly c-closed.

A graph is c-closed when every non-adjacent pair with at least c common
neighbors is impossible, i.e. adjacency is forced at c shared neighbors.
The weak variant asks every induced subgraph for one vertex whose
non-neighbors all share fewer than c neighbors with it; equivalently the
graph admits a c-good elimination ordering.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .graph import Graph


@dataclass
class ClosureProfile:
    """Closure numbers plus the witnessing elimination ordering.

    per_vertex_requirement[i] is 1 + the largest number of common
    neighbors elimination_order[i] shared with a surviving non-neighbor
    at the moment it was removed; weak_closure is the maximum of these.
    """

    c_closure: int
    weak_closure: int
    elimination_order: tuple[int, ...]
    per_vertex_requirement: tuple[int, ...]


def _nonadjacent_pair_counts(g: Graph) -> sparse.csr_matrix:
    """Common-neighbor counts for distinct non-adjacent pairs.

    Sparse wedge aggregation (A @ A), so only pairs with at least one
    common neighbor are materialized; adjacent pairs and the diagonal
    are masked out.
    """
    if g.n == 0 or g.m == 0:
        return sparse.csr_matrix((g.n, g.n), dtype=np.int32)
    a = g.to_scipy()
    p = (a @ a).tocsr()
    rows = np.repeat(np.arange(g.n), np.diff(p.indptr))
    p.data[rows == p.indices] = 0
    p = (p - p.multiply(a)).tocsr()
    p.eliminate_zeros()
    return p


def c_closure_number(g: Graph) -> int:
    """Smallest c such that g is c-closed.

    Equals 1 + max common-neighbor count over non-adjacent pairs, and 1
    when no non-adjacent pair has a common neighbor.
    """
    p = _nonadjacent_pair_counts(g)
    return int(p.data.max()) + 1 if p.nnz else 1


def is_c_good(g: Graph, v: int, c: int) -> bool:
    """True iff every non-neighbor u of v has |N(u) ∩ N(v)| <= c - 1."""
    g.check_vertex(v)
    if c < 1:
        raise ValueError("c must be a positive integer")
    counts = np.zeros(g.n, dtype=np.int64)
    for w in g.neighbors(v):
        counts[g.neighbors(w)] += 1
    counts[g.neighbors(v)] = 0
    counts[v] = 0
    return bool(counts.max(initial=0) <= c - 1)


def weak_closure_number(g: Graph) -> ClosureProfile:
    """Smallest c such that g is weakly c-closed, with a witness ordering.

    Greedily removes a vertex minimizing its current goodness
    requirement (1 + max common neighbors with a surviving non-neighbor,
    ties to the smallest index); the answer is the maximum requirement
    along the run. The greedy minimax is exact because requirements are
    monotone non-increasing under vertex deletion, mirroring the
    min-degree argument for degeneracy.
    """
    n = g.n
    if n == 0:
        return ClosureProfile(1, 1, (), ())

    p = _nonadjacent_pair_counts(g)
    c_closure = int(p.data.max()) + 1 if p.nnz else 1

    up = sparse.triu(p, k=1).tocoo()
    rows = up.row.astype(np.int64)
    cols = up.col.astype(np.int64)
    keys = rows * n + cols
    counts = up.data.astype(np.int64)
    if keys.size and np.any(np.diff(keys) <= 0):
        order = np.argsort(keys)
        keys, counts = keys[order], counts[order]
        rows, cols = rows[order], cols[order]

    max_count = int(counts.max()) if counts.size else 0
    # hist[v, c] = number of surviving non-adjacent partners of v whose
    # current common-neighbor count is exactly c (c >= 1)
    hist = np.zeros((n, max_count + 2), dtype=np.int64)
    if counts.size:
        np.add.at(hist, (rows, counts), 1)
        np.add.at(hist, (cols, counts), 1)

    current_max = np.zeros(n, dtype=np.int64)
    if p.nnz:
        current_max = np.asarray(p.max(axis=1).todense()).ravel().astype(np.int64)

    partner_indptr = p.indptr.copy()
    partner_indices = p.indices.astype(np.int64)

    alive = np.ones(n, dtype=bool)
    heap: list[tuple[int, int]] = [(int(current_max[v]) + 1, v)
                                   for v in range(n)]
    heapq.heapify(heap)

    order_out: list[int] = []
    reqs_out: list[int] = []

    def refresh(cands: np.ndarray) -> None:
        """Walk the maxima of candidate vertices down emptied histogram levels."""
        cands = np.unique(cands)
        cands = cands[alive[cands]]
        cands = cands[current_max[cands] > 0]
        if cands.size == 0:
            return
        stale = cands[hist[cands, current_max[cands]] == 0]
        for u in stale.tolist():
            mu = int(current_max[u])
            while mu > 0 and hist[u, mu] == 0:
                mu -= 1
            current_max[u] = mu
            heapq.heappush(heap, (mu + 1, u))

    for _ in range(n):
        while True:
            req, v = heapq.heappop(heap)
            if alive[v] and req == current_max[v] + 1:
                break
        alive[v] = False
        order_out.append(v)
        reqs_out.append(req)

        touched = []

        # retire all pairs (v, u): their counts leave u's histogram
        partners = partner_indices[partner_indptr[v]:partner_indptr[v + 1]]
        partners = partners[alive[partners]]
        if partners.size:
            qk = np.minimum(partners, v) * n + np.maximum(partners, v)
            pos = np.searchsorted(keys, qk)
            cnt = counts[pos]
            live = cnt > 0
            if np.any(live):
                u_live = partners[live]
                np.add.at(hist, (u_live, cnt[live]), -1)
                counts[pos[live]] = 0
                touched.append(u_live)

        # each surviving neighbor pair of v loses one common neighbor
        nbrs = g.neighbors(v)
        nbrs = nbrs[alive[nbrs]]
        if nbrs.size >= 2:
            ii, jj = np.triu_indices(nbrs.size, k=1)
            aa, bb = nbrs[ii], nbrs[jj]
            qk = aa * n + bb
            pos = np.searchsorted(keys, qk, side="left")
            pos_ok = pos < keys.size
            hit = np.zeros(qk.size, dtype=bool)
            hit[pos_ok] = keys[pos[pos_ok]] == qk[pos_ok]
            aa, bb, pos = aa[hit], bb[hit], pos[hit]
            old = counts[pos]
            live = old > 0
            aa, bb, pos, old = aa[live], bb[live], pos[live], old[live]
            if old.size:
                counts[pos] = old - 1
                np.add.at(hist, (aa, old), -1)
                np.add.at(hist, (bb, old), -1)
                survives = old > 1
                if np.any(survives):
                    np.add.at(hist, (aa[survives], old[survives] - 1), 1)
                    np.add.at(hist, (bb[survives], old[survives] - 1), 1)
                touched.append(aa)
                touched.append(bb)

        if touched:
            refresh(np.concatenate(touched))

    weak = max(reqs_out)
    return ClosureProfile(c_closure=c_closure, weak_closure=weak,
                          elimination_order=tuple(order_out),
                          per_vertex_requirement=tuple(reqs_out))
