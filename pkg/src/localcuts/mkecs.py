"""Maximal k-edge-connected subgraph decomposition.

The decomposition is unique: no maximal k-edge-connected vertex set ever
crosses a directed cut with fewer than k edges, so any sequence of valid
cut removals converges to the same partition.  The baseline recursion
peels strongly connected components and global small cuts; the local
variants first carve off small components found by the bounded-size
detector, touching only a fraction of the graph per removal, and fall
back to the global routine for whatever remains.
"""

import dataclasses
import math
from collections import deque

from . import flow
from .edge_cut import detect_component_param, out_edge_ids
from .graph import Edge, Graph, UndirectedGraph, strongly_connected_components


@dataclasses.dataclass(frozen=True)
class EdgeCut:
    side: frozenset
    cut_edges: tuple


@dataclasses.dataclass
class Decomposition:
    k: int
    classes: list  # list of frozensets, a partition of the vertex set

    def as_sorted(self):
        return sorted((tuple(sorted(c)) for c in self.classes))

    def __eq__(self, other):
        return self.k == other.k and self.as_sorted() == other.as_sorted()


def _sccs_of(vertices, edges):
    adj = {v: [] for v in vertices}
    for e in edges:
        adj[e.tail].append(e.head)
    return strongly_connected_components(vertices, lambda v: adj[v])


def _cut_below(vertices, edges, k):
    """Directed cut (S, rest) with fewer than k edges, on a strongly
    connected piece, or None.  Max-flow from and to a fixed root decides
    the global minimum cut exactly."""
    if len(vertices) <= 1:
        return None
    ordered = sorted(vertices)
    root = ordered[0]
    n_max = max(vertices)
    for v in ordered[1:]:
        res = flow.st_edge_cut_below(n_max, edges, root, v, k)
        if res is not None:
            side, cut = res
            return EdgeCut(frozenset(side & set(vertices)), tuple(cut))
        res = flow.st_edge_cut_below(n_max, edges, v, root, k)
        if res is not None:
            side, cut = res
            return EdgeCut(frozenset(side & set(vertices)), tuple(cut))
    return None


def global_edge_cut_below(g, k):
    """Cut with at most k-1 edges in a strongly connected graph, or None."""
    return _cut_below(set(g.vertices()), g.edges, k)


def _baseline(vertices, edges, k):
    """Recursive SCC / small-cut peeling; returns the class list."""
    classes = []
    stack = [(set(vertices), list(edges))]
    while stack:
        verts, eds = stack.pop()
        inner = [e for e in eds if e.tail in verts and e.head in verts
                 and e.tail != e.head]
        for comp in _sccs_of(verts, inner):
            if len(comp) == 1:
                classes.append(frozenset(comp))
                continue
            comp_edges = [e for e in inner
                          if e.tail in comp and e.head in comp]
            cut = _cut_below(comp, comp_edges, k)
            if cut is None:
                classes.append(frozenset(comp))
            else:
                removed = set(cut.cut_edges)
                stack.append((comp, [e for e in comp_edges
                                     if e.id not in removed]))
    return classes


def baseline_mkecs(g, k):
    """Reference decomposition into maximal k-edge-connected subgraphs."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return Decomposition(k, [])
    return Decomposition(k, _baseline(set(g.vertices()), g.edges, k))


def detection_edge_bound(k, delta):
    """Edge-size cap of components the local detector can return."""
    return max(2 * k * (delta + k), delta)


def _graph_on(n, edges):
    return Graph.from_edges(n, edges)


def _reverse_edges(edges):
    return [Edge(e.id, e.head, e.tail) for e in edges]


def _local_directed(vertices, edges, k, delta, rng, classes):
    """Local peeling of one strongly connected piece (directed scheme)."""
    n_max = max(vertices) if vertices else 0
    k_eff = min(k, max(1, delta))
    kd = k_eff - 1
    p = 1.0 - 1.0 / max(2, len(vertices)) ** 3
    live = set(vertices)
    live_edges = [e for e in edges if e.tail != e.head]

    if len(live_edges) <= detection_edge_bound(kd, delta):
        classes.extend(_baseline(live, live_edges, k))
        return

    worklist = deque(sorted(live))
    queued = set(worklist)
    while worklist:
        s = worklist.popleft()
        queued.discard(s)
        if s not in live:
            continue
        fwd = _graph_on(n_max, live_edges)
        res = detect_component_param(fwd, s, kd, delta, p, rng)
        members = set(res.members)
        if not members:
            bwd = _graph_on(n_max, _reverse_edges(live_edges))
            res = detect_component_param(bwd, s, kd, delta, p, rng)
            members = set(res.members)
        if not members:
            continue
        # carve the component off: crossing edges vanish, the piece is
        # decomposed independently, the frontier is re-examined
        inner = []
        rest = []
        frontier = set()
        for e in live_edges:
            tin, hin = e.tail in members, e.head in members
            if tin and hin:
                inner.append(e)
            elif not tin and not hin:
                rest.append(e)
            else:
                frontier.add(e.head if tin else e.tail)
        classes.extend(_baseline(members, inner, k))
        live -= members
        live_edges = rest
        for v in sorted(frontier & live):
            if v not in queued:
                worklist.append(v)
                queued.add(v)
    if not live:
        return
    for comp in _sccs_of(live, live_edges):
        comp_edges = [e for e in live_edges
                      if e.tail in comp and e.head in comp]
        if len(comp) == 1:
            classes.append(frozenset(comp))
            continue
        cut = _cut_below(comp, comp_edges, k)
        if cut is None:
            classes.append(frozenset(comp))
            continue
        removed = set(cut.cut_edges)
        kept = [e for e in comp_edges if e.id not in removed]
        touched = {e.tail for e in comp_edges if e.id in removed}
        touched |= {e.head for e in comp_edges if e.id in removed}
        for sub in _sccs_of(comp, kept):
            sub_edges = [e for e in kept
                         if e.tail in sub and e.head in sub]
            _local_directed(sub, sub_edges, k, delta, rng, classes)


def mkecs_directed(g, k, rng, delta=None):
    """Decomposition driven by local detection; equals the baseline.

    delta defaults to ceil(sqrt(m / k)), balancing detection budgets
    against the number of global cut rounds.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return Decomposition(k, [])
    if delta is None:
        delta = max(1, math.ceil(math.sqrt(max(1, g.m) / k)))
    classes = []
    for comp in _sccs_of(set(g.vertices()), [e for e in g.edges
                                             if e.tail != e.head]):
        if len(comp) == 1:
            classes.append(frozenset(comp))
            continue
        comp_edges = [e for e in g.edges
                      if e.tail in comp and e.head in comp and
                      e.tail != e.head]
        _local_directed(comp, comp_edges, k, delta, rng, classes)
    return Decomposition(k, classes)


def _forest_rounds(n, edges, k):
    """k maximal spanning forests, preferring edges at low-degree endpoints.

    Pushing forests onto the sparse periphery first makes dense cores
    shed their surplus edges, which is where the certificate actually
    thins the graph.
    """
    deg = {}
    for e in edges:
        deg[e.tail] = deg.get(e.tail, 0) + 1
        deg[e.head] = deg.get(e.head, 0) + 1
    remaining = sorted(edges, key=lambda e: (deg[e.tail] + deg[e.head], e.id))
    kept = []
    for _ in range(k):
        if not remaining:
            break
        parent = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != x:
                parent[x], x = root, parent[x]
            return root

        forest = []
        leftovers = []
        for e in remaining:
            ra, rb = find(e.tail), find(e.head)
            if ra == rb:
                leftovers.append(e)
            else:
                parent[ra] = rb
                forest.append(e)
        kept.extend(forest)
        remaining = leftovers
    return kept


def sparse_certificate(und, k):
    """Subgraph of at most k(n-1) edges preserving cuts up to size k.

    Union of k maximal spanning forests, each built on the edges unused
    by the previous ones: any cut of size at most k keeps all its edges,
    any larger cut keeps at least k of them.
    """
    if k < 1:
        raise ValueError("k must be positive")
    kept = _forest_rounds(und.n, und.edges, k)
    kept.sort(key=lambda e: e.id)
    return UndirectedGraph(und.n, [(e.tail, e.head) for e in kept])


def _bidirect(edges):
    out = []
    for e in edges:
        out.append(Edge(2 * e.id, e.tail, e.head))
        out.append(Edge(2 * e.id + 1, e.head, e.tail))
    return out


def _undirected_boundary(edges, members):
    return [e for e in edges
            if (e.tail in members) != (e.head in members)]


def _local_undirected(vertices, uedges, k, gamma, rng, classes):
    """Local peeling of one connected undirected piece via certificates."""
    n_max = max(vertices)
    delta = k * gamma
    k_eff = min(k, max(1, delta))
    kd = k_eff - 1
    p = 1.0 - 1.0 / max(2, len(vertices)) ** 3

    live = set(vertices)
    live_edges = list(uedges)

    if 2 * len(live_edges) <= detection_edge_bound(kd, delta):
        classes.extend(_baseline(live, _bidirect(live_edges), k))
        return

    cert = _forest_rounds(n_max, live_edges, k)
    removed_since = 0

    worklist = deque(sorted(live))
    queued = set(worklist)
    while worklist:
        s = worklist.popleft()
        queued.discard(s)
        if s not in live:
            continue
        if removed_since > max(len(live), len(cert) // 2):
            cert = _forest_rounds(n_max, live_edges, k)
            removed_since = 0
        cg = _graph_on(n_max, _bidirect(cert))
        res = detect_component_param(cg, s, kd, delta, p, rng)
        members = set(res.members)
        if not members:
            continue
        # the certificate may be stale between rebuilds, so candidate
        # components are validated against the live graph before removal
        boundary = _undirected_boundary(live_edges, members)
        if len(boundary) > k - 1:
            continue
        boundary_ids = {e.id for e in boundary}
        inner = [e for e in live_edges
                 if e.tail in members and e.head in members]
        classes.extend(_baseline(members, _bidirect(inner), k))
        live -= members
        live_edges = [e for e in live_edges
                      if e.id not in boundary_ids and
                      e.tail not in members and e.head not in members]
        cert = [e for e in cert
                if e.id not in boundary_ids and
                e.tail not in members and e.head not in members]
        removed_since += len(boundary_ids) + len(inner)
        for e in boundary:
            v = e.tail if e.tail in live else e.head
            if v in live and v not in queued:
                worklist.append(v)
                queued.add(v)
    if not live:
        return
    # global phase on a fresh certificate of what remains
    cert = _forest_rounds(n_max, live_edges, k)
    adj = {v: [] for v in live}
    for e in live_edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    comps = strongly_connected_components(live, lambda v: adj[v])
    for comp in comps:
        comp_u = [e for e in live_edges
                  if e.tail in comp and e.head in comp]
        if len(comp) == 1:
            classes.append(frozenset(comp))
            continue
        comp_cert = [e for e in cert if e.tail in comp and e.head in comp]
        cut = _cut_below(comp, _bidirect(comp_cert), k)
        if cut is None:
            classes.append(frozenset(comp))
            continue
        cut_uids = {eid // 2 for eid in cut.cut_edges}
        kept = [e for e in comp_u if e.id not in cut_uids]
        sub_adj = {v: [] for v in comp}
        for e in kept:
            sub_adj[e.tail].append(e.head)
            sub_adj[e.head].append(e.tail)
        for sub in strongly_connected_components(comp, lambda v: sub_adj[v]):
            sub_edges = [e for e in kept
                         if e.tail in sub and e.head in sub]
            if len(sub) == 1:
                classes.append(frozenset(sub))
            else:
                _local_undirected(sub, sub_edges, k, gamma, rng, classes)


def mkecs_undirected(und, k, rng, gamma=None):
    """Undirected decomposition working on sparse certificates.

    gamma defaults to ceil(sqrt(n) / k); detection runs with edge budget
    k * gamma on the certificate of the current residual graph, and
    every candidate is validated against the residual graph itself.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if und.n == 0:
        return Decomposition(k, [])
    if gamma is None:
        gamma = max(1, math.ceil(math.sqrt(und.n) / k))
    classes = []
    simple = [e for e in und.edges if e.tail != e.head]
    adj = {v: [] for v in range(1, und.n + 1)}
    for e in simple:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    for comp in strongly_connected_components(range(1, und.n + 1),
                                              lambda v: adj[v]):
        if len(comp) == 1:
            classes.append(frozenset(comp))
            continue
        comp_edges = [e for e in simple
                      if e.tail in comp and e.head in comp]
        _local_undirected(comp, comp_edges, k, gamma, rng, classes)
    return Decomposition(k, classes)


def baseline_mkecs_undirected(und, k):
    return baseline_mkecs(und.to_directed(), k)
