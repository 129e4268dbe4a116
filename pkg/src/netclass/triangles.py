"""Triangle statistics and the tightly-knit family decomposition.

Triangle density is the fraction of wedges that close into triangles.
Graphs dense in triangles admit a family of disjoint, radius-2 clusters
that are dense in both edges and triangles and capture a constant
fraction of all triangles; the constructive pipeline alternates a
Jaccard cleaner with a max-degree extractor until no edges remain.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .cliques import degree_orientation
from .graph import Graph, bfs_levels, wedge_count


@dataclass
class TriangleStats:
    """Triangle and wedge counts with the closure fraction between them.

    operation_count is the number of neighbor-pair adjacency checks the
    counting scheme performs: all wedges for the plain counter, and
    sum over v of C(outdeg(v), 2) for the oriented one.
    """

    triangle_count: int
    wedge_count: int
    operation_count: int

    @property
    def density(self) -> float:
        if self.wedge_count == 0:
            return 0.0
        return 3.0 * self.triangle_count / self.wedge_count


def triangle_count_naive(g: Graph) -> TriangleStats:
    """Count triangles by checking every neighbor pair of every vertex.

    Work is proportional to the wedge count; the triangle total is one
    third of the closed-wedge count.
    """
    flags = np.zeros(g.n, dtype=bool)
    closed_ordered = 0
    for u in range(g.n):
        nbrs = g.neighbors(u)
        if nbrs.size < 2:
            continue
        flags[nbrs] = True
        for v in nbrs:
            closed_ordered += int(flags[g.neighbors(v)].sum())
        flags[nbrs] = False
    w = wedge_count(g)
    return TriangleStats(triangle_count=closed_ordered // 6, wedge_count=w,
                         operation_count=w)


def triangle_count_oriented(g: Graph) -> TriangleStats:
    """Count triangles through the degree orientation.

    Each triangle is found exactly once, at its lowest-ordered vertex.
    Adjacency checks use a reusable mark array over out-neighborhoods,
    never a global edge lookup, so the work tracks sum of C(outdeg, 2).
    """
    og = degree_orientation(g)
    flags = np.zeros(g.n, dtype=bool)
    triangles = 0
    for u in range(g.n):
        out = og.out_neighbors(u)
        if out.size < 2:
            continue
        flags[out] = True
        for v in out:
            triangles += int(flags[og.out_neighbors(v)].sum())
        flags[out] = False
    dplus = og.out_degrees.astype(np.int64)
    ops = int((dplus * (dplus - 1) // 2).sum())
    return TriangleStats(triangle_count=triangles, wedge_count=wedge_count(g),
                         operation_count=ops)


def triangle_density(g: Graph) -> float:
    """3 t(G) / w(G), and 0 for wedge-free graphs."""
    return triangle_count_oriented(g).density


# -- cleaner --------------------------------------------------------------


@dataclass
class EdgeDeletion:
    """One cleaner deletion, with the edge's state just before removal."""

    u: int
    v: int
    similarity: float
    triangles_destroyed: int


def clean(g: Graph, epsilon: float,
          seeds=None) -> tuple[Graph, list[EdgeDeletion]]:
    """Delete edges of Jaccard similarity below epsilon until none remain.

    Similarity is not monotone under deletion, so a FIFO worklist seeded
    with every edge re-enqueues the edges incident to the endpoints of
    each deletion. The returned log fixes the deletion order and records
    how many triangles each deletion destroyed.

    ``seeds`` restricts the initial worklist to the given edges; callers
    must guarantee every other edge already satisfies the threshold
    (the decomposition uses this after extractions, which only disturb
    the neighborhoods bordering the removed cluster).
    """
    if not (0 < epsilon <= 1):
        raise ValueError("epsilon must lie in (0, 1]")
    adj: list[set[int]] = [set(g.neighbors(v).tolist()) for v in range(g.n)]

    def norm(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    if seeds is None:
        seeds = map(tuple, g.edge_array().tolist())
    queue: deque[tuple[int, int]] = deque(norm(u, v) for u, v in seeds)
    queued = set(queue)
    log: list[EdgeDeletion] = []
    while queue:
        u, v = queue.popleft()
        queued.discard((u, v))
        if v not in adj[u]:
            continue
        inter = len(adj[u] & adj[v])
        denom = len(adj[u]) + len(adj[v]) - inter - 2
        similarity = inter / denom if denom > 0 else 0.0
        if similarity >= epsilon:
            continue
        adj[u].discard(v)
        adj[v].discard(u)
        log.append(EdgeDeletion(u, v, similarity, inter))
        for a in (u, v):
            for b in sorted(adj[a]):
                e = norm(a, b)
                if e not in queued:
                    queue.append(e)
                    queued.add(e)

    edges = [(u, w) for u in range(g.n) for w in adj[u] if u < w]
    cleaned = Graph.from_edges(edges, n=g.n, labels=g.labels)
    return cleaned, log


# -- extractor -------------------------------------------------------------


@dataclass
class ExtractorTrace:
    """Provenance of one extracted cluster."""

    seed: int                       # max-degree vertex the cluster grew from
    d_max: int
    scores: dict[int, int]          # two-hop candidates -> triangle scores
    supplement: tuple[int, ...]     # chosen candidates (score desc, id asc)


def extract(g: Graph) -> tuple[np.ndarray, ExtractorTrace, Graph]:
    """Carve one radius-2 cluster around a maximum-degree vertex.

    The cluster is the closed neighborhood of the seed plus up to
    d_max two-hop vertices with the largest non-zero scores, where a
    vertex's score counts the triangles it forms with two neighbors of
    the seed. Expects a cleaned graph (every edge similarity at least
    the cleaner's epsilon) with at least one edge.
    """
    if g.m == 0:
        raise ValueError("cannot extract a cluster from an edgeless graph")
    degs = g.degrees
    seed = int(np.argmax(degs))  # argmax takes the smallest index on ties
    d_max = int(degs[seed])
    hood = set(g.neighbors(seed).tolist())
    base = hood | {seed}

    candidates: set[int] = set()
    for u in hood:
        candidates.update(g.neighbors(u).tolist())
    candidates -= base

    adj = {u: set(g.neighbors(u).tolist()) for u in candidates | hood}
    scores: dict[int, int] = {}
    for w in sorted(candidates):
        shared = adj[w] & hood
        tri = sum(len(adj[a] & shared) for a in shared) // 2
        scores[w] = tri
    ranked = sorted((w for w in scores if scores[w] > 0),
                    key=lambda w: (-scores[w], w))
    supplement = tuple(ranked[:d_max])

    cluster = np.array(sorted(base | set(supplement)), dtype=np.int64)
    rest = np.setdiff1d(np.arange(g.n), cluster, assume_unique=True)
    trace = ExtractorTrace(seed=seed, d_max=d_max, scores=scores,
                           supplement=supplement)
    return cluster, trace, g.induced_subgraph(rest)


# -- decomposition ----------------------------------------------------------


@dataclass
class ClusterCertificate:
    """Density and radius evidence for one cluster, on the input graph.

    Edge and triangle densities are None when the cluster is too small
    for the corresponding binomial to be positive (the constraint is
    then vacuous).
    """

    vertices: tuple[int, ...]
    size: int
    edge_count: int
    triangle_count: int
    radius: int
    rho_edge: float | None
    rho_tri: float | None


@dataclass
class PhaseLog:
    """One pipeline phase: a cleaning pass or a cluster extraction."""

    kind: str                        # "clean" | "extract"
    epsilon: float | None = None
    edges_deleted: int = 0
    triangles_destroyed: int = 0     # cleaning: sum over deletions
    cluster_size: int = 0
    triangles_saved: int = 0         # extraction: triangles inside cluster
    triangles_cut: int = 0           # extraction: triangles crossing it


@dataclass
class TightlyKnitFamily:
    """Disjoint radius-2 clusters with density certificates.

    captured_triangle_fraction counts triangles of the ORIGINAL graph
    that fall entirely inside a single cluster, against the original
    triangle total.
    """

    clusters: list[tuple[int, ...]]
    certificates: list[ClusterCertificate]
    captured_triangle_fraction: float
    epsilon: float | None
    total_triangles: int
    phases: list[PhaseLog] = field(default_factory=list)
    diagnostic: str | None = None

    @property
    def cleaning_triangles_destroyed(self) -> int:
        return sum(p.triangles_destroyed for p in self.phases
                   if p.kind == "clean")


def _triangles_touching(g: Graph, cluster: np.ndarray) -> tuple[int, int]:
    """Triangles fully inside the cluster, and all triangles meeting it.

    Inclusion-exclusion over per-vertex and per-internal-edge triangle
    counts keeps the work local to the cluster's neighborhoods instead
    of rescanning the whole graph.
    """
    inside = set(cluster.tolist())
    flags = np.zeros(g.n, dtype=bool)
    per_vertex = 0
    for v in cluster.tolist():
        nbrs = g.neighbors(v)
        if nbrs.size < 2:
            continue
        flags[nbrs] = True
        edges_among = sum(int(flags[g.neighbors(w)].sum()) for w in nbrs) // 2
        flags[nbrs] = False
        per_vertex += edges_among
    per_edge = 0
    for v in cluster.tolist():
        for w in g.neighbors(v).tolist():
            if w in inside and v < w:
                per_edge += int(np.intersect1d(
                    g.neighbors(v), g.neighbors(w), assume_unique=True).size)
    t_inside = triangle_count_naive(g.induced_subgraph(cluster)).triangle_count
    # a triangle with k cluster vertices is hit k, C(k,2) and C(k,3) times
    t_touch = per_vertex - per_edge + t_inside
    return t_inside, t_touch


def _radius(g: Graph) -> int:
    """Smallest eccentricity; large sentinel when disconnected."""
    best = g.n + 1
    for v in range(g.n):
        levels = bfs_levels(g, v)
        if levels.reached < g.n:
            continue
        best = min(best, levels.eccentricity)
    return best


def _certificate(g: Graph, cluster: np.ndarray) -> ClusterCertificate:
    sub = g.induced_subgraph(cluster)
    tri = triangle_count_naive(sub).triangle_count
    size = len(cluster)
    rho_edge = sub.m / math.comb(size, 2) if size >= 2 else None
    rho_tri = tri / math.comb(size, 3) if size >= 3 else None
    return ClusterCertificate(vertices=tuple(int(x) for x in cluster),
                              size=size, edge_count=sub.m,
                              triangle_count=tri, radius=_radius(sub),
                              rho_edge=rho_edge, rho_tri=rho_tri)


def tightly_knit_decomposition(g: Graph,
                               epsilon: float | None = None) -> TightlyKnitFamily:
    """Alternate cleaning and extraction until no edges remain.

    With epsilon=None the cleaner threshold is fixed to tau(G)/4 once,
    up front: the charging argument for the cleaner's triangle budget
    is stated against the input's density, so the threshold is not
    re-derived on residual graphs. A triangle-free input with automatic
    epsilon yields an empty family with a diagnostic.
    """
    base_stats = triangle_count_naive(g)
    total = base_stats.triangle_count
    if epsilon is None:
        delta = base_stats.density
        if delta == 0.0:
            return TightlyKnitFamily(
                clusters=[], certificates=[], captured_triangle_fraction=0.0,
                epsilon=None, total_triangles=total,
                diagnostic="triangle-free input: no triangles to capture")
        epsilon = delta / 4.0
    elif not (0 < epsilon <= 1):
        raise ValueError("epsilon must lie in (0, 1]")

    # identity labels so cluster ids survive re-indexing across phases
    work = Graph(g.n, g.indptr, g.indices, labels=np.arange(g.n))
    clusters: list[tuple[int, ...]] = []
    phases: list[PhaseLog] = []
    t_work = total
    seeds = None  # first clean examines every edge
    while work.m > 0:
        cleaned, deletions = clean(work, epsilon, seeds=seeds)
        destroyed = sum(d.triangles_destroyed for d in deletions)
        phases.append(PhaseLog(
            kind="clean", epsilon=epsilon, edges_deleted=len(deletions),
            triangles_destroyed=destroyed))
        t_work -= destroyed
        if cleaned.m == 0:
            break
        local, trace, remainder = extract(cleaned)
        members = tuple(int(x) for x in cleaned.labels[local])
        clusters.append(members)
        t_inside, t_touch = _triangles_touching(cleaned, local)
        phases.append(PhaseLog(
            kind="extract", cluster_size=len(members),
            triangles_saved=t_inside,
            triangles_cut=t_touch - t_inside))
        t_work -= t_touch
        # only neighborhoods bordering the cluster changed: reseed there
        boundary = set()
        for c in local.tolist():
            boundary.update(cleaned.neighbors(c).tolist())
        boundary.difference_update(local.tolist())
        origin_to_rest = {int(lab): i for i, lab in enumerate(remainder.labels)}
        seeds = []
        for b in sorted(boundary):
            rb = origin_to_rest[int(cleaned.labels[b])]
            seeds.extend((rb, int(w)) for w in remainder.neighbors(rb))
        work = remainder

    certificates = [_certificate(g, np.array(c, dtype=np.int64))
                    for c in clusters]
    captured = sum(c.triangle_count for c in certificates)
    fraction = captured / total if total else 0.0
    return TightlyKnitFamily(clusters=clusters, certificates=certificates,
                             captured_triangle_fraction=fraction,
                             epsilon=epsilon, total_triangles=total,
                             phases=phases)


# -- independent verification ------------------------------------------------


@dataclass
class FamilyVerification:
    ok: bool
    violations: list[str]
    recomputed_capture: float


def verify_tightly_knit(g: Graph, family: TightlyKnitFamily,
                        rho_floor: float | None = None) -> FamilyVerification:
    """Re-derive every certificate of a family from scratch.

    Checks disjointness, radius at most 2, exact edge/triangle counts
    (via the oriented counter, a different route than construction), the
    reported densities, and the captured-triangle fraction. A rho_floor
    additionally requires every defined density to reach that value.
    """
    violations: list[str] = []
    seen: set[int] = set()
    for idx, members in enumerate(family.clusters):
        overlap = seen.intersection(members)
        if overlap:
            violations.append(f"cluster {idx} overlaps earlier ones: {sorted(overlap)}")
        seen.update(members)

    recomputed_total = triangle_count_oriented(g).triangle_count
    if recomputed_total != family.total_triangles:
        violations.append("total triangle count mismatch")

    captured = 0
    for idx, (members, cert) in enumerate(zip(family.clusters,
                                              family.certificates)):
        sub = g.induced_subgraph(np.array(members, dtype=np.int64))
        tri = triangle_count_oriented(sub).triangle_count
        captured += tri
        radius = _radius(sub)
        if radius > 2:
            violations.append(f"cluster {idx} has radius {radius} > 2")
        if sub.m != cert.edge_count:
            violations.append(f"cluster {idx} edge count drifted")
        if tri != cert.triangle_count:
            violations.append(f"cluster {idx} triangle count drifted")
        size = len(members)
        rho_e = sub.m / math.comb(size, 2) if size >= 2 else None
        rho_t = tri / math.comb(size, 3) if size >= 3 else None
        for got, want, name in ((cert.rho_edge, rho_e, "rho_edge"),
                                (cert.rho_tri, rho_t, "rho_tri")):
            if (got is None) != (want is None):
                violations.append(f"cluster {idx} {name} definedness mismatch")
            elif got is not None and not math.isclose(got, want, rel_tol=1e-12):
                violations.append(f"cluster {idx} {name} mismatch")
        if rho_floor is not None:
            if rho_e is not None and rho_e < rho_floor:
                violations.append(f"cluster {idx} rho_edge below floor")
            if rho_t is not None and rho_t < rho_floor:
                violations.append(f"cluster {idx} rho_tri below floor")

    frac = captured / recomputed_total if recomputed_total else 0.0
    if not math.isclose(frac, family.captured_triangle_fraction,
                        rel_tol=1e-12, abs_tol=1e-12):
        violations.append("captured fraction mismatch")
    return FamilyVerification(ok=not violations, violations=violations,
                              recomputed_capture=frac)
