"""Chordality testing and maximal clique extraction.

Lexicographic BFS gives an order whose reverse is a perfect elimination
ordering exactly on chordal graphs; the first violation yields an induced
cycle of length >= 4.  On chordal graphs the maximal cliques fall out of the
elimination structure with total size O(n+m).
"""

from .graph import shortest_path_avoiding


def lex_bfs(g):
    """LexBFS order of g, ties broken toward smaller vertex ids.

    Partition refinement over a doubly linked list of buckets; each bucket
    is an insertion-ordered dict so ids inside stay sorted.
    """
    if g.n == 0:
        return []
    buckets = {0: dict.fromkeys(g.vertices)}
    nxt = {0: None}
    prv = {0: None}
    head = 0
    fresh = 1
    vb = dict.fromkeys(g.vertices, 0)
    order = []
    while head is not None:
        b = buckets[head]
        if not b:
            head = nxt[head]
            if head is not None:
                prv[head] = None
            continue
        v = next(iter(b))
        del b[v]
        del vb[v]
        order.append(v)
        partners = {}
        for w in g.adj[v]:
            bid = vb.get(w)
            if bid is None:
                continue
            part = partners.get(bid)
            if part is None:
                part = fresh
                fresh += 1
                buckets[part] = {}
                partners[bid] = part
                p = prv[bid]
                nxt[part] = bid
                prv[part] = p
                prv[bid] = part
                if p is not None:
                    nxt[p] = part
                if head == bid:
                    head = part
            del buckets[bid][w]
            buckets[part][w] = None
            vb[w] = part
    return order


class ChordalityWitness:
    """An induced cycle of length >= 4."""

    def __init__(self, cycle):
        self.cycle = list(cycle)

    def __repr__(self):
        return f"ChordalityWitness({self.cycle})"


def _madj(g, order):
    """For each vertex, its neighbors earlier in the order."""
    pos = {v: i for i, v in enumerate(order)}
    earlier = {}
    for v in order:
        earlier[v] = [w for w in g.adj[v] if pos[w] < pos[v]]
    return earlier, pos


def check_peo(g, order):
    """Validate reverse(order) as a perfect elimination ordering.

    Returns (True, None) or (False, (v, u, w)) where u is v's latest earlier
    neighbor and w is an earlier neighbor of v not adjacent to u.
    """
    earlier, pos = _madj(g, order)
    adjset = g._adjset
    for v in order:
        m = earlier[v]
        if len(m) <= 1:
            continue
        u = max(m, key=lambda x: pos[x])
        nu = adjset[u]
        for w in m:
            if w != u and w not in nu:
                return False, (v, u, w)
    return True, None


def extract_hole(g, v, u, w):
    """Induced cycle >= 4 through v given non-adjacent u, w in N(v)."""
    forbidden = g.closed_neighborhood(v) - {u, w}
    path = shortest_path_avoiding(g, u, w, forbidden)
    if path is not None:
        return ChordalityWitness([v] + path)
    # Fall back to a global search; some failing triple must close a cycle.
    for x in g.vertices:
        nx = g.closed_neighborhood(x)
        for a in g.adj[x]:
            for b in g.adj[x]:
                if a >= b or b in g._adjset[a]:
                    continue
                p = shortest_path_avoiding(g, a, b, nx - {a, b})
                if p is not None:
                    return ChordalityWitness([x] + p)
    raise AssertionError("hole extraction failed on a non-chordal graph")


def maximal_cliques(g):
    """All maximal cliques of a chordal g, else a ChordalityWitness.

    Returns (cliques, None) with cliques a list of frozensets in a
    deterministic order, or (None, witness).
    """
    order = lex_bfs(g)
    ok, bad = check_peo(g, order)
    if not ok:
        return None, extract_hole(g, *bad)
    earlier, pos = _madj(g, order)
    parent = {}
    for v in order:
        m = earlier[v]
        parent[v] = max(m, key=lambda x: pos[x]) if m else None
    kill = set()
    for v in order:
        p = parent[v]
        if p is not None and len(earlier[v]) == len(earlier[p]) + 1:
            kill.add(p)
    cliques = [frozenset(earlier[v]) | {v} for v in order if v not in kill]
    cliques.sort(key=lambda c: sorted(c))
    return cliques, None


def is_chordal(g):
    _, witness = maximal_cliques(g)
    return witness is None


def brute_force_maximal_cliques(g):
    """Maximal cliques by subset enumeration; oracle-side, n <= ~16."""
    if g.n == 0:
        return []
    verts = list(g.vertices)
    cliques = []
    n = len(verts)
    for mask in range(1, 1 << n):
        members = [verts[i] for i in range(n) if mask >> i & 1]
        if not g.is_clique(members):
            continue
        ms = set(members)
        if any(all(g.has_edge(x, v) for v in members) for x in verts if x not in ms):
            continue
        cliques.append(frozenset(members))
    cliques.sort(key=lambda c: sorted(c))
    return cliques
