"""Directed multigraph with incidence-list query access.

Vertices are 1-based integers.  Edges carry stable integer ids so that
overlays can reverse individual edges without touching the base graph.
All local algorithms interact with a graph through CountedView, which
charges one query per incidence probe (including the probe that learns
an incidence slot is absent).
"""

import dataclasses
from collections import deque


class GraphError(ValueError):
    pass


class EdgeListError(GraphError):
    """Raised on malformed edge-list input; message carries a line number."""


@dataclasses.dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int


class Graph:
    """Immutable directed multigraph over vertices 1..n."""

    __slots__ = ("n", "edges", "_out", "_in", "_by_id")

    def __init__(self, n, pairs):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = n
        self.edges = [Edge(i, t, h) for i, (t, h) in enumerate(pairs)]
        self._index()

    @classmethod
    def from_edges(cls, n, edges):
        """Build from Edge triples, keeping the given ids (need not be
        positional).  Incidence lists follow the iteration order."""
        g = cls.__new__(cls)
        g.n = n
        g.edges = list(edges)
        g._index()
        return g

    def _index(self):
        self._out = [[] for _ in range(self.n + 1)]
        self._in = [[] for _ in range(self.n + 1)]
        self._by_id = {}
        for e in self.edges:
            if not (1 <= e.tail <= self.n and 1 <= e.head <= self.n):
                raise GraphError("edge %d endpoint out of range" % e.id)
            if e.id in self._by_id:
                raise GraphError("duplicate edge id %d" % e.id)
            self._by_id[e.id] = e
            self._out[e.tail].append(e.id)
            self._in[e.head].append(e.id)

    @property
    def m(self):
        return len(self.edges)

    def has_vertex(self, v):
        return 1 <= v <= self.n

    def vertices(self):
        return range(1, self.n + 1)

    def out_ids(self, u):
        return self._out[u]

    def in_ids(self, u):
        return self._in[u]

    def edge(self, eid):
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError("unknown edge id %d" % eid) from None

    def out_degree(self, u):
        return len(self._out[u])

    def in_degree(self, u):
        return len(self._in[u])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self._out == other._out and self._in == other._in)

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


class UndirectedGraph:
    """Undirected multigraph; each edge is an unordered endpoint pair."""

    __slots__ = ("n", "edges")

    def __init__(self, n, pairs):
        self.n = n
        self.edges = [Edge(i, u, v) for i, (u, v) in enumerate(pairs)]
        for e in self.edges:
            if not (1 <= e.tail <= n and 1 <= e.head <= n):
                raise GraphError("edge %d endpoint out of range" % e.id)

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        d = 0
        for e in self.edges:
            if e.tail == v:
                d += 1
            if e.head == v:
                d += 1
        return d

    def to_directed(self):
        """Antiparallel-pair encoding: undirected edge i maps to ids 2i, 2i+1."""
        es = []
        for e in self.edges:
            es.append(Edge(2 * e.id, e.tail, e.head))
            es.append(Edge(2 * e.id + 1, e.head, e.tail))
        return Graph.from_edges(self.n, es)

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self):
        return "UndirectedGraph(n=%d, m=%d)" % (self.n, self.m)


def reverse_graph(g):
    """Graph with every edge flipped; ids are preserved.

    Incidence lists swap roles, so the i-th in-edge of v in g is the
    i-th out-edge of v in the reverse.
    """
    rev = [Edge(e.id, e.head, e.tail) for e in g.edges]
    return Graph.from_edges(g.n, rev)


def load_edge_list(text):
    """Parse the delimited format: header "n m", then one "tail head" per line.

    Lines starting with '#' (after stripping) are comments.  Vertices are
    1-based.  Raises EdgeListError with the offending line number.
    """
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError("line %d: expected two fields, got %d"
                                % (lineno, len(fields)))
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError("line %d: non-integer field" % lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError("line %d: negative header value" % lineno)
            header = (a, b)
        else:
            if not (1 <= a <= header[0] and 1 <= b <= header[0]):
                raise EdgeListError("line %d: endpoint out of range 1..%d"
                                    % (lineno, header[0]))
            pairs.append((a, b))
    if header is None:
        raise EdgeListError("line 1: missing header")
    n, m = header
    if len(pairs) != m:
        raise EdgeListError("line %d: header promises %d edges, found %d"
                            % (lineno if text.splitlines() else 1, m, len(pairs)))
    return Graph(n, pairs)


def dump_edge_list(g):
    lines = ["%d %d" % (g.n, g.m)]
    for e in g.edges:
        lines.append("%d %d" % (e.tail, e.head))
    return "\n".join(lines) + "\n"


def load_undirected_edge_list(text):
    g = load_edge_list(text)
    return UndirectedGraph(g.n, [(e.tail, e.head) for e in g.edges])


class Overlay:
    """Mutable orientation overlay on a base graph.

    Tracks a set of reversed edge ids.  Per-vertex incidence is kept in
    insertion-ordered keyed maps, materialized lazily; a flipped edge is
    appended at the end of the gaining endpoint's list.  The base graph
    is never modified.
    """

    __slots__ = ("base", "reversed_ids", "_out", "_in")

    def __init__(self, base):
        self.base = base
        self.reversed_ids = set()
        self._out = {}
        self._in = {}

    def has_vertex(self, v):
        return self.base.has_vertex(v)

    def is_reversed(self, eid):
        return eid in self.reversed_ids

    def edge(self, eid):
        e = self.base.edge(eid)
        if eid in self.reversed_ids:
            return Edge(eid, e.head, e.tail)
        return e

    def _materialize(self, v):
        if v not in self._out:
            self._out[v] = dict.fromkeys(self.base.out_ids(v))
        if v not in self._in:
            self._in[v] = dict.fromkeys(self.base.in_ids(v))

    def out_ids(self, u):
        om = self._out.get(u)
        if om is None:
            return self.base.out_ids(u)
        return list(om)

    def in_ids(self, u):
        im = self._in.get(u)
        if im is None:
            return self.base.in_ids(u)
        return list(im)

    def flip(self, eid):
        """Reverse one edge's current orientation."""
        cur = self.edge(eid)
        self._materialize(cur.tail)
        self._materialize(cur.head)
        del self._out[cur.tail][eid]
        del self._in[cur.head][eid]
        # new orientation: head -> tail, appended at the end of each list
        self._out[cur.head][eid] = None
        self._in[cur.tail][eid] = None
        if eid in self.reversed_ids:
            self.reversed_ids.discard(eid)
        else:
            self.reversed_ids.add(eid)

    def apply_path_reversal(self, edge_ids):
        """Flip every edge of a directed path (given in path order)."""
        if __debug__ and edge_ids:
            prev = None
            for eid in edge_ids:
                e = self.edge(eid)
                assert prev is None or e.tail == prev, \
                    "path edges are not consecutive"
                prev = e.head
        for eid in edge_ids:
            self.flip(eid)


class CountedView:
    """Query-counting facade; one unit per probe, absent probes included."""

    __slots__ = ("base", "query_count")

    def __init__(self, base):
        self.base = base
        self.query_count = 0

    def query_out_edge(self, u, i):
        """Return the i-th (1-based) out-edge of u, or None when absent."""
        if not self.base.has_vertex(u):
            raise GraphError("unknown vertex %r" % (u,))
        if i < 1:
            raise GraphError("incidence index must be positive")
        self.query_count += 1
        ids = self.base.out_ids(u)
        if i > len(ids):
            return None
        return self.base.edge(ids[i - 1])

    def query_in_edge(self, u, i):
        if not self.base.has_vertex(u):
            raise GraphError("unknown vertex %r" % (u,))
        if i < 1:
            raise GraphError("incidence index must be positive")
        self.query_count += 1
        ids = self.base.in_ids(u)
        if i > len(ids):
            return None
        return self.base.edge(ids[i - 1])


def strongly_connected_components(vertices, succ):
    """Iterative Tarjan SCC over an adjacency callable.

    `succ(v)` yields successor vertices.  Returns a list of vertex sets
    in reverse topological order of the condensation (sinks first).
    """
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = [0]

    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                elif w in on_stack:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def graph_sccs(g):
    return strongly_connected_components(
        g.vertices(), lambda v: (g.edge(eid).head for eid in g.out_ids(v)))


def is_strongly_connected(g):
    if g.n <= 1:
        return True
    return len(graph_sccs(g)) == 1


def undirected_components(und):
    """Connected components of an UndirectedGraph, as vertex sets."""
    adj = {v: [] for v in range(1, und.n + 1)}
    for e in und.edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    seen = set()
    comps = []
    for v in adj:
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        q = deque([v])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    seen.add(w)
                    q.append(w)
        comps.append(comp)
    return comps
