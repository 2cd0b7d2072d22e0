"""Local detection of bounded-size k-edge-out components.

detect_component runs a sequence of budgeted DFS passes from a start
vertex over an orientation overlay.  After each pass that exhausts its
edge budget, one processed edge is sampled uniformly and the tree path
to it is reversed, blocking one potential escape route.  A pass that
finishes under budget returns its visited set, which is then a minimal
component with at most as many leaving edges as passes already run.
"""

import dataclasses
import math

from .graph import CountedView, Overlay


@dataclasses.dataclass
class DfsResult:
    # F: edges in processing order, each with current orientation and the
    # way it was reached ("out" scan of a visited vertex, or "in" scan of
    # a vertex that became interior in symmetric modes).
    processed: list
    visited: set
    tree_parent: dict
    completed: bool


@dataclasses.dataclass
class ComponentResult:
    members: frozenset
    out_edges: tuple          # edge ids leaving members, w.r.t. the base graph
    edge_size: int            # edges with both endpoints in members
    queries_used: int
    trials_used: int
    edges_processed: int
    seed: object = None

    def __bool__(self):
        return bool(self.members)


def budgeted_dfs(view, s, budget, interior_partner=None):
    """DFS from s processing at most `budget` edges.

    The stack starts with s; popping a vertex visits it, which processes
    all its out-edges by pushing their heads.  Each encountered vertex is
    attached to the DFS tree at first encounter.  The walk stops the
    moment the processed count reaches the budget, even mid-vertex; a
    walk that exhausts reachability exactly at the budget is still
    reported as not completed.

    With `interior_partner`, visiting a vertex w also scans the in-edges
    of interior_partner(w) (once), appending them to the processed list
    under the same budget.  This is the volume accounting used on split
    graphs; for a plain graph the identity partner yields symmetric
    volume.
    """
    processed = []
    visited = set()
    tree_parent = {}
    in_scanned = set()
    stack = [s]

    if budget <= 0:
        return DfsResult(processed, visited, tree_parent, budget > 0)

    while stack:
        u = stack.pop()
        if u in visited:
            continue
        visited.add(u)
        if interior_partner is not None:
            q = interior_partner(u)
            if q is not None and q not in in_scanned:
                in_scanned.add(q)
                i = 1
                stop = False
                while True:
                    e = view.query_in_edge(q, i)
                    if e is None:
                        break
                    processed.append((e, "in"))
                    if len(processed) == budget:
                        stop = True
                        break
                    i += 1
                if stop:
                    return DfsResult(processed, visited, tree_parent, False)
        i = 1
        while True:
            e = view.query_out_edge(u, i)
            if e is None:
                break
            processed.append((e, "out"))
            if e.head != s and e.head not in tree_parent:
                tree_parent[e.head] = (u, e.id)
            stack.append(e.head)
            if len(processed) == budget:
                return DfsResult(processed, visited, tree_parent, False)
            i += 1
    return DfsResult(processed, visited, tree_parent, True)


def _tree_path(tree_parent, s, v):
    """Edge ids of the unique tree path s -> v (empty when v == s)."""
    path = []
    cur = v
    while cur != s:
        parent, eid = tree_parent[cur]
        path.append(eid)
        cur = parent
    path.reverse()
    return path


def _sample_path(overlay, s, res, rng):
    """Pick a processed edge uniformly and build the path to reverse.

    For an original-orientation edge the path runs to its tail; for an
    already-reversed edge the path runs to its tail and continues over
    the edge itself, ending at the original tail.  Edges discovered by
    in-scans can have a tail outside the DFS tree; then the path to the
    in-tree head is used instead (reversing any root path preserves the
    soundness and minimality guarantees).
    """
    e, _kind = res.processed[rng.randrange(len(res.processed))]

    def in_tree(v):
        return v == s or v in res.tree_parent

    if not overlay.is_reversed(e.id):
        end = e.tail if in_tree(e.tail) else e.head
        return _tree_path(res.tree_parent, s, end)
    if in_tree(e.tail):
        return _tree_path(res.tree_parent, s, e.tail) + [e.id]
    return _tree_path(res.tree_parent, s, e.head)


def _run_detection(base, s, k, round_budget, final_budget, final_accept, rng,
                   interior_partner=None, processed_cap=None):
    """Shared detection core; returns (members or None, queries, processed)."""
    overlay = Overlay(base)
    view = CountedView(overlay)
    total = 0
    for _ in range(k):
        res = budgeted_dfs(view, s, round_budget,
                           interior_partner=interior_partner)
        total += len(res.processed)
        if res.completed:
            return res.visited, view.query_count, total
        if processed_cap is not None and total > processed_cap:
            return None, view.query_count, total
        path = _sample_path(overlay, s, res, rng)
        overlay.apply_path_reversal(path)
    res = budgeted_dfs(view, s, final_budget,
                       interior_partner=interior_partner)
    total += len(res.processed)
    if len(res.processed) <= final_accept:
        return res.visited, view.query_count, total
    return None, view.query_count, total


def out_edge_ids(g, members):
    """Edges of g leaving the vertex set (self-loops never leave)."""
    out = []
    for u in members:
        for eid in g.out_ids(u):
            if g.edge(eid).head not in members:
                out.append(eid)
    return out


def internal_edge_count(g, members):
    cnt = 0
    for u in members:
        for eid in g.out_ids(u):
            if g.edge(eid).head in members:
                cnt += 1
    return cnt


def verify_k_edge_out(g, members, k):
    """True iff at most k edges of g leave the vertex set."""
    return len(out_edge_ids(g, members)) <= k


def detect_component(g, s, k, delta, rng, seed=None, processed_cap=None):
    """One detection attempt for a k-edge-out component containing s.

    A nonempty result is always a minimal component with at most k
    leaving edges and edge size at most max(2k(delta+k), delta).  If s
    lies in a k-edge-out component of edge size at most delta, the
    result is nonempty with probability at least 1/2.
    """
    if not g.has_vertex(s):
        raise ValueError("unknown start vertex %d" % s)
    if k < 0 or delta < 0:
        raise ValueError("k and delta must be non-negative")
    round_budget = 2 * k * (delta + k)
    members, queries, total = _run_detection(
        g, s, k, round_budget, delta + 1, delta, rng,
        processed_cap=processed_cap)
    if members is None:
        return ComponentResult(frozenset(), (), 0, queries, 1, total, seed)
    return ComponentResult(frozenset(members),
                           tuple(out_edge_ids(g, members)),
                           internal_edge_count(g, members),
                           queries, 1, total, seed)


def repetitions_for(p, ratio=2.0):
    """Trials needed so that per-trial success 1 - 1/ratio amplifies to p."""
    if not 0.0 <= p < 1.0:
        raise ValueError("p must lie in [0, 1)")
    return max(1, math.ceil(math.log(1.0 / (1.0 - p), ratio)))


def detect_component_param(g, s, k, delta, p, rng, seed=None,
                           worst_case=False):
    """Amplified detection with target success probability p.

    Repeats detect_component until a nonempty result or the repetition
    budget runs out.  In worst_case mode each trial is aborted once it
    processes more than four times the expected edge bound, and the
    repetition count grows accordingly (per-trial success drops from
    1/2 to 1/4).
    """
    expected = 2 * k * k * (delta + k) + delta + 1
    cap = 4 * expected if worst_case else None
    reps = repetitions_for(p, ratio=4.0 / 3.0 if worst_case else 2.0)
    queries = 0
    processed = 0
    for t in range(1, reps + 1):
        res = detect_component(g, s, k, delta, rng, seed=seed,
                               processed_cap=cap)
        queries += res.queries_used
        processed += res.edges_processed
        if res:
            return dataclasses.replace(res, queries_used=queries,
                                       trials_used=t,
                                       edges_processed=processed)
    return ComponentResult(frozenset(), (), 0, queries, reps, processed, seed)
