"""Maximal-clique enumeration, degeneracy machinery, and edge orientations.

Two independent enumerators are provided: a per-vertex backtracking
procedure whose recursion depth is bounded by the closure parameter of
the input, and a pivoting Bron-Kerbosch over a degeneracy ordering with
polynomial work per emitted clique. They must agree exactly; tests hold
them to that.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceededError
from .graph import Graph

DEFAULT_CLIQUE_BUDGET = 10_000_000


@dataclass
class CliqueSet:
    """Canonically ordered maximal cliques of one graph.

    Each clique is an ascending vertex tuple; the list is sorted, so two
    CliqueSets over the same graph compare equal regardless of emission
    order.
    """

    cliques: list[tuple[int, ...]]
    graph_fingerprint: str

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def largest(self) -> tuple[int, ...]:
        best_size = max(len(c) for c in self.cliques)
        return min(c for c in self.cliques if len(c) == best_size)


@dataclass
class OrientedGraph:
    """An acyclic orientation of a graph along a vertex ordering.

    Every undirected edge appears exactly once, directed from the
    lower-ranked endpoint to the higher-ranked one. ``degeneracy`` is
    populated only for min-degree removal orderings.
    """

    order: np.ndarray                    # position -> vertex
    rank: np.ndarray                     # vertex -> position
    out_indptr: np.ndarray
    out_indices: np.ndarray              # sorted ascending within each row
    degeneracy: int | None = None
    removal_degrees: np.ndarray | None = field(default=None, repr=False)

    @property
    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    def out_neighbors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]]


def _orient_by_rank(g: Graph, rank: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """CSR of out-neighbors when each edge points up the given ranks."""
    edges = g.edge_array()
    if edges.size == 0:
        return np.zeros(g.n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64)
    u, v = edges[:, 0], edges[:, 1]
    forward = rank[u] < rank[v]
    heads = np.where(forward, u, v)
    tails = np.where(forward, v, u)
    order = np.lexsort((tails, heads))
    heads, tails = heads[order], tails[order]
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.add.at(indptr, heads + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, tails


def degeneracy_ordering(g: Graph) -> OrientedGraph:
    """Iterative min-degree removal; ties broken by smallest index.

    The degeneracy is the largest degree seen at removal time; edges are
    oriented along the removal order, so every out-degree is at most the
    degeneracy.
    """
    n = g.n
    degs = g.degrees.astype(np.int64).copy()
    alive = np.ones(n, dtype=bool)
    heap = [(int(degs[v]), v) for v in range(n)]
    heapq.heapify(heap)
    order = np.empty(n, dtype=np.int64)
    removal_degrees = np.empty(n, dtype=np.int64)
    for i in range(n):
        while True:
            d, v = heapq.heappop(heap)
            if alive[v] and d == degs[v]:
                break
        alive[v] = False
        order[i] = v
        removal_degrees[i] = d
        for w in g.neighbors(v):
            if alive[w]:
                degs[w] -= 1
                heapq.heappush(heap, (int(degs[w]), w))
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    indptr, indices = _orient_by_rank(g, rank)
    alpha = int(removal_degrees.max()) if n else 0
    return OrientedGraph(order=order, rank=rank, out_indptr=indptr,
                         out_indices=indices, degeneracy=alpha,
                         removal_degrees=removal_degrees)


def degree_orientation(g: Graph) -> OrientedGraph:
    """Each edge directed from the lower-degree endpoint to the higher,
    ties broken lexicographically by index."""
    degs = g.degrees
    order = np.lexsort((np.arange(g.n), degs))
    rank = np.empty(g.n, dtype=np.int64)
    rank[order] = np.arange(g.n)
    indptr, indices = _orient_by_rank(g, rank)
    return OrientedGraph(order=order, rank=rank, out_indptr=indptr,
                         out_indices=indices, degeneracy=None)


# -- maximal clique enumeration -----------------------------------------


def enumerate_maximal_cliques_backtracking(
        g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> CliqueSet:
    """Per-vertex backtracking enumerator.

    For a start vertex v and history H, the candidate set N holds v plus
    every vertex adjacent to v and to all of H. If N induces a clique,
    the union of H and N is a maximal clique; otherwise recurse on each
    w in N \\ {v}
    with v appended to the history. Each run finds every maximal clique
    through v; a clique is kept only at its minimum vertex, which
    deduplicates across the outer loop.
    """
    adj = [set(g.neighbors(v).tolist()) for v in range(g.n)]
    found: set[frozenset[int]] = set()
    visited: set[tuple[int, frozenset[int]]] = set()

    def is_clique(vs: set[int]) -> bool:
        need = len(vs) - 1
        return all(len(adj[x] & vs) >= need for x in vs)

    def run(start: int, v: int, history: frozenset[int]) -> None:
        # different recursion orders reach identical (v, history) states;
        # exploring one of them is enough
        state = (v, history)
        if state in visited:
            return
        visited.add(state)
        cand = adj[v].copy()
        for h in history:
            cand &= adj[h]
        candidate_set = cand | {v}
        if is_clique(candidate_set):
            clique = frozenset(history | candidate_set)
            # the run from `start` sees every maximal clique through it;
            # keeping only those whose minimum is `start` dedups globally
            if min(clique) == start and clique not in found:
                found.add(clique)
                if len(found) > budget:
                    raise BudgetExceededError(budget, "maximal cliques")
            return
        new_history = history | {v}
        for w in sorted(cand):
            run(start, w, new_history)

    for start in range(g.n):
        visited.clear()
        run(start, start, frozenset())

    return CliqueSet(cliques=sorted(tuple(sorted(c)) for c in found),
                     graph_fingerprint=g.fingerprint())


def enumerate_maximal_cliques(g: Graph,
                              budget: int = DEFAULT_CLIQUE_BUDGET) -> CliqueSet:
    """Pivoting Bron-Kerbosch over a degeneracy ordering.

    The outer loop fixes each vertex v in degeneracy order with its
    later neighbors as candidates and earlier ones as exclusions, which
    keeps candidate sets no larger than the degeneracy; the inner
    recursion picks a pivot maximizing candidate coverage. Emission is
    polynomial-delay in practice and exact.
    """
    adj = [set(g.neighbors(v).tolist()) for v in range(g.n)]
    og = degeneracy_ordering(g)
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            if len(out) > budget:
                raise BudgetExceededError(budget, "maximal cliques")
            return
        pivot = max(p | x, key=lambda u: (len(adj[u] & p), -u))
        for w in sorted(p - adj[pivot]):
            expand(r + [w], p & adj[w], x & adj[w])
            p.remove(w)
            x.add(w)

    rank = og.rank
    for v in og.order.tolist():
        later = {w for w in adj[v] if rank[w] > rank[v]}
        earlier = adj[v] - later
        expand([v], later, earlier)

    return CliqueSet(cliques=sorted(out), graph_fingerprint=g.fingerprint())


def maximum_clique(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> tuple[int, ...]:
    """A largest clique, taken from the maximal-clique enumeration."""
    if g.n == 0:
        raise ValueError("maximum clique of the empty graph is undefined")
    return enumerate_maximal_cliques(g, budget=budget).largest()


def enumerate_all_cliques(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET,
                          sink=None) -> int:
    """Count every non-empty clique, optionally streaming each one.

    Works vertex by vertex in degeneracy order, extending cliques only
    into out-neighborhoods, so each clique is generated exactly once
    (at its earliest vertex) and the work is O(n * 2^degeneracy).
    """
    og = degeneracy_ordering(g)
    out_adj = [set(og.out_neighbors(v).tolist()) for v in range(g.n)]
    count = 0

    def emit(members: list[int]) -> None:
        nonlocal count
        count += 1
        if count > budget:
            raise BudgetExceededError(budget, "cliques")
        if sink is not None:
            sink(tuple(sorted(members)))

    def grow(members: list[int], cand: set[int]) -> None:
        for w in sorted(cand):
            members.append(w)
            emit(members)
            grow(members, cand & out_adj[w])
            members.pop()

    for v in range(g.n):
        emit([v])
        grow([v], out_adj[v])
    return count
