"""Local detection of bounded-volume k-vertex-out components.

A vertex component is found by running the edge detector on a lazily
materialized split graph: every vertex v becomes an in-copy and an
out-copy joined by a transit edge (the start vertex keeps a single
merged copy), and every original edge runs from the tail's out-copy to
the head's in-copy.  Vertex cuts of the original graph then correspond
to transit-edge cuts of the split graph, with volumes inflated by at
most a factor of three.
"""

import dataclasses

from .edge_cut import _run_detection, repetitions_for
from .graph import Edge, GraphError


class SplitGraph:
    """Query view of the split graph of g rooted at s; nothing is built.

    Vertex ids: the out-copy of v is v itself; the in-copy of v != s is
    n + v; the two copies of s are merged as s.  Edge ids: an image of
    base edge e keeps id e; the transit edge of v != s has id m + v.
    The transit edge occupies position 1 of the in-copy's out-incidence.
    """

    __slots__ = ("base", "s", "_transit0")

    def __init__(self, base, s):
        if not base.has_vertex(s):
            raise GraphError("unknown start vertex %d" % s)
        self.base = base
        self.s = s
        # transit ids start after the largest base edge id
        self._transit0 = 1 + max((e.id for e in base.edges), default=-1)

    @property
    def vertex_count(self):
        return 2 * self.base.n - 1

    @property
    def edge_count(self):
        return self.base.m + self.base.n - 1

    def _in_copy(self, v):
        return v if v == self.s else self.base.n + v

    def has_vertex(self, v):
        n = self.base.n
        if 1 <= v <= n:
            return True
        return n < v <= 2 * n and v - n != self.s

    def is_out_copy(self, v):
        return 1 <= v <= self.base.n

    def original(self, v):
        return v if v <= self.base.n else v - self.base.n

    def edge(self, eid):
        base = self.base
        if eid < self._transit0:
            e = base.edge(eid)
            return Edge(eid, e.tail, self._in_copy(e.head))
        v = eid - self._transit0
        if not (1 <= v <= base.n) or v == self.s:
            raise GraphError("unknown edge id %d" % eid)
        return Edge(eid, base.n + v, v)

    def out_ids(self, u):
        base = self.base
        if u == self.s:
            return base.out_ids(u)
        if u <= base.n:
            return base.out_ids(u)
        return [self._transit0 + (u - base.n)]

    def in_ids(self, u):
        base = self.base
        if u == self.s:
            return base.in_ids(u)
        if u <= base.n:
            return [self._transit0 + u]
        return base.in_ids(u - base.n)

    def interior_partner(self, v):
        """The vertex whose in-edges become chargeable once v is visited.

        Visiting an out-copy makes the matching in-copy interior; the
        merged start vertex is its own partner.  Visiting an in-copy
        triggers nothing by itself.
        """
        if v == self.s:
            return v
        if v <= self.base.n:
            return self.base.n + v
        return None

    def materialize(self):
        """Explicit Graph copy of the split graph (testing aid).

        Split vertices are renumbered 1..2n-1: out-copies keep their id,
        in-copies n+v shift down by one for v > s.
        """
        n = self.base.n

        def remap(v):
            if v <= n:
                return v
            return v - 1 if v - n > self.s else v

        edges = []
        for e in self.base.edges:
            edges.append((remap(e.tail), remap(self._in_copy(e.head))))
        for v in range(1, n + 1):
            if v != self.s:
                edges.append((remap(n + v), v))
        from .graph import Graph
        return Graph(2 * n - 1, edges)


def split_view(g, s):
    return SplitGraph(g, s)


@dataclasses.dataclass
class VertexComponentResult:
    members: frozenset          # component C, start vertex included
    boundary: frozenset         # heads of edges leaving C, outside C
    volume: int                 # edges with tail in C
    symmetric_volume: int       # edges with tail or head in C
    queries_used: int
    trials_used: int
    edges_processed: int
    seed: object = None

    def __bool__(self):
        return bool(self.members)


def volume(g, members):
    return sum(g.out_degree(v) for v in members)


def symmetric_volume(g, members):
    seen = 0
    for e in g.edges:
        if e.tail in members or e.head in members:
            seen += 1
    return seen


def boundary_of(g, members):
    b = set()
    for u in members:
        for eid in g.out_ids(u):
            h = g.edge(eid).head
            if h not in members:
                b.add(h)
    return b


def verify_vertex_out(g, members, k):
    """True iff the out-neighborhood of the set (outside it) has size <= k."""
    return len(boundary_of(g, members)) <= k


def component_volume_bound(k, delta):
    """Guaranteed cap on the split-graph volume of any nonempty result.

    Rounds process fewer than 2k(3*delta + k) edges and the final pass
    accepts at most 3*delta, so 2(k+1)(3*delta + k) dominates both.
    """
    return 2 * (k + 1) * (3 * delta + k)


def detect_component_volume(view, s, k, delta_v, rng, symmetric=False):
    """One detection attempt under a volume budget delta_v.

    `view` is a Graph or SplitGraph.  In symmetric mode the in-edges of
    vertices that become interior are charged (and sampled) as well, so
    the budget tracks restricted symmetric volume.  Returns the raw
    visited vertex set of the view (or None) plus counters.
    """
    if k < 0 or delta_v < 0:
        raise ValueError("k and delta_v must be non-negative")
    partner = None
    if symmetric:
        partner = getattr(view, "interior_partner", None) or (lambda v: v)
    round_budget = 2 * k * (delta_v + k)
    return _run_detection(view, s, k, round_budget, delta_v + 1, delta_v,
                          rng, interior_partner=partner)


def detect_vertex_out_component(g, s, k, delta, p, rng, symmetric=False,
                                seed=None):
    """Amplified search for a k-vertex-out component containing s.

    Looks for components of volume at most delta (symmetric volume when
    `symmetric` is set) by running the volume detector on the split
    graph with budget 3*delta.  A nonempty result always has a boundary
    of at most k vertices; if a qualifying component exists the result
    is nonempty with probability at least p.
    """
    if not g.has_vertex(s):
        raise ValueError("unknown start vertex %d" % s)
    sv = SplitGraph(g, s)
    reps = repetitions_for(p)
    queries = 0
    processed = 0
    for t in range(1, reps + 1):
        raw, q, total = detect_component_volume(sv, s, k, 3 * delta, rng,
                                                symmetric=symmetric)
        queries += q
        processed += total
        if raw is not None:
            members = frozenset(v for v in raw if sv.is_out_copy(v))
            return VertexComponentResult(
                members, frozenset(boundary_of(g, members)),
                volume(g, members), symmetric_volume(g, members),
                queries, t, processed, seed)
    return VertexComponentResult(frozenset(), frozenset(), 0, 0,
                                 queries, reps, processed, seed)
