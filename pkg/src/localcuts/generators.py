"""Seeded instance generators with machine-checkable certificates.

Each generator returns (graph, certificate); the certificate records the
planted structure so tests can verify claims without re-deriving them.
Generation is deterministic per (params, rng state) and every advertised
property is asserted before returning.
"""

import dataclasses
import random

from .graph import Graph, UndirectedGraph, is_strongly_connected


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict
    seed: int


FAMILIES = ("random_digraph", "planted_edge_component", "planted_separator",
            "clique_union", "cycle_union", "figure_shape")


def generate(spec):
    rng = random.Random(spec.seed)
    if spec.family == "random_digraph":
        return random_digraph(rng=rng, **spec.params)
    if spec.family == "planted_edge_component":
        return planted_edge_component(rng=rng, **spec.params)
    if spec.family == "planted_separator":
        return planted_separator(rng=rng, **spec.params)
    if spec.family == "clique_union":
        return clique_union(rng=rng, **spec.params)
    if spec.family == "cycle_union":
        return cycle_union(rng=rng, **spec.params)
    if spec.family == "figure_shape":
        return figure_shape()
    raise ValueError("unknown family %r" % (spec.family,))


def random_digraph(n, m, rng, allow_parallel=True):
    """Uniform random directed multigraph without self-loops."""
    if n < 1 or (n == 1 and m > 0):
        raise ValueError("infeasible random digraph parameters")
    pairs = []
    seen = set()
    attempts = 0
    while len(pairs) < m:
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        attempts += 1
        if u == v:
            continue
        if not allow_parallel:
            if (u, v) in seen:
                if attempts > 100 * m + 100:
                    raise ValueError("too few distinct pairs for m=%d" % m)
                continue
            seen.add((u, v))
        pairs.append((u, v))
    return Graph(n, pairs), {}


def _random_scc_pairs(vertices, extra_edges, rng):
    """Strongly connected pair list: a random cycle plus extra edges."""
    order = list(vertices)
    rng.shuffle(order)
    pairs = [(order[i], order[(i + 1) % len(order)])
             for i in range(len(order))]
    for _ in range(extra_edges):
        u = rng.choice(order)
        v = rng.choice(order)
        while v == u and len(order) > 1:
            v = rng.choice(order)
        if u != v:
            pairs.append((u, v))
    return pairs


def planted_edge_component(component_size, k, blob_edges, rng):
    """A k-edge-out cycle component around vertex 1, feeding a dense blob.

    The component is the directed cycle 1..component_size (edge size =
    component_size, exactly k leaving edges); the rest is a strongly
    connected blob with roughly blob_edges edges and one edge back into
    the component, so the whole graph is strongly connected.
    """
    c = component_size
    if c < 2 or k < 1 or blob_edges < 4:
        raise ValueError("infeasible planted component parameters")
    nb = max(3, round(blob_edges ** 0.5) + 1)
    n = c + nb
    pairs = [(i, i % c + 1) for i in range(1, c + 1)]
    blob = list(range(c + 1, n + 1))
    pairs += _random_scc_pairs(blob, max(0, blob_edges - nb), rng)
    for _ in range(k):
        pairs.append((rng.randint(1, c), rng.choice(blob)))
    pairs.append((rng.choice(blob), 1))
    g = Graph(n, pairs)
    members = set(range(1, c + 1))
    out = [e for e in g.edges if e.tail in members and e.head not in members]
    assert len(out) == k
    assert is_strongly_connected(g)
    cert = {"component": members, "out_edge_count": k, "edge_size": c}
    return g, cert


def planted_separator(side_left, side_right, sep_size, rng,
                      extra_per_side=None):
    """Two dense blobs joined only through a small vertex separator.

    Left reaches right only through the middle vertices; a few direct
    right-to-left edges keep the whole graph strongly connected without
    shrinking the cut.
    """
    if side_left < 2 or side_right < 2 or sep_size < 1:
        raise ValueError("infeasible separator parameters")
    if extra_per_side is None:
        extra_per_side = 2 * max(side_left, side_right)
    left = list(range(1, side_left + 1))
    mid = list(range(side_left + 1, side_left + sep_size + 1))
    right = list(range(side_left + sep_size + 1,
                       side_left + sep_size + side_right + 1))
    n = side_left + sep_size + side_right
    pairs = _random_scc_pairs(left, extra_per_side, rng)
    pairs += _random_scc_pairs(right, extra_per_side, rng)
    for v in mid:
        pairs.append((rng.choice(left), v))
        pairs.append((v, rng.choice(right)))
    for _ in range(max(2, sep_size)):
        pairs.append((rng.choice(right), rng.choice(left)))
    g = Graph(n, pairs)
    lset, mset, rset = set(left), set(mid), set(right)
    for e in g.edges:
        assert not (e.tail in lset and e.head in rset)
    assert is_strongly_connected(g)
    cert = {"left": lset, "middle": mset, "right": rset}
    return g, cert


def clique_union(count, size, rng=None):
    """Disjoint union of `count` cliques on `size` vertices (undirected)."""
    if count < 1 or size < 2:
        raise ValueError("infeasible clique union parameters")
    pairs = []
    for c in range(count):
        base = c * size
        for i in range(1, size + 1):
            for j in range(i + 1, size + 1):
                pairs.append((base + i, base + j))
    und = UndirectedGraph(count * size, pairs)
    cert = {"blocks": [set(range(c * size + 1, (c + 1) * size + 1))
                       for c in range(count)],
            "block_edges": size * (size - 1) // 2}
    return und, cert


def cycle_union(count, length, rng=None):
    """Disjoint union of directed cycles."""
    if count < 1 or length < 2:
        raise ValueError("infeasible cycle union parameters")
    pairs = []
    for c in range(count):
        base = c * length
        for i in range(1, length + 1):
            pairs.append((base + i, base + i % length + 1))
    g = Graph(count * length, pairs)
    cert = {"blocks": [set(range(c * length + 1, (c + 1) * length + 1))
                       for c in range(count)]}
    return g, cert


def figure_shape():
    """The 7-vertex, 12-edge regression graph: a 4-clique on 1..4 with
    three degree-2 satellites 5, 6, 7 strapped across its corners."""
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
             (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7)]
    und = UndirectedGraph(7, pairs)
    cert = {"core": {1, 2, 3, 4}, "satellites": {5, 6, 7}}
    return und, cert


def farness_lower_bound(g, k):
    """Certified lower bound on edge modifications to make g
    k-edge-connected (also valid for k-vertex-connectivity).

    Counts per-vertex degree deficiencies and per-strongly-connected-
    component boundary deficiencies; every inserted edge repairs at most
    one out- and one in-unit of either kind, and deletions repair none.
    """
    from .graph import graph_sccs
    out_def = sum(max(0, k - g.out_degree(v)) for v in g.vertices())
    in_def = sum(max(0, k - g.in_degree(v)) for v in g.vertices())
    degree_bound = max(out_def, in_def)
    comps = graph_sccs(g)
    comp_bound = 0
    if len(comps) > 1:
        comp_of = {}
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        out_cut = [0] * len(comps)
        in_cut = [0] * len(comps)
        for e in g.edges:
            if comp_of[e.tail] != comp_of[e.head]:
                out_cut[comp_of[e.tail]] += 1
                in_cut[comp_of[e.head]] += 1
        comp_bound = max(sum(max(0, k - c) for c in out_cut),
                         sum(max(0, k - c) for c in in_cut))
    return max(degree_bound, comp_bound)
