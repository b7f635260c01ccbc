"""Immutable undirected graphs and the handful of searches everything else uses.

Vertices are dense integers assigned at parse time; original names live in a
side table on the parsed graph.  Induced subgraphs keep the parent's vertex
ids so certificates can always name original vertices.
"""

from collections import deque


class GraphError(ValueError):
    """Bad input to a graph constructor or query."""


class Graph:
    """Undirected graph with sorted adjacency and deterministic iteration.

    ``vertices`` is a sorted tuple of ints, ``adj`` maps vertex -> sorted
    tuple of neighbors.  Instances are immutable after construction.
    """

    __slots__ = ("vertices", "adj", "edge_count", "names", "_vset", "_adjset")

    def __init__(self, vertices, edges, names=None):
        vset = set(vertices)
        if len(vset) != len(list(vertices)):
            raise GraphError("duplicate vertex ids")
        adjset = {v: set() for v in vset}
        m = 0
        for u, v in edges:
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u},{v}) uses unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in adjset[u]:
                raise GraphError(f"parallel edge ({u},{v})")
            adjset[u].add(v)
            adjset[v].add(u)
            m += 1
        self.vertices = tuple(sorted(vset))
        self._vset = vset
        self._adjset = adjset
        self.adj = {v: tuple(sorted(adjset[v])) for v in self.vertices}
        self.edge_count = m
        self.names = names  # optional dict vertex -> original token

    def __contains__(self, v):
        return v in self._vset

    @property
    def n(self):
        return len(self.vertices)

    def has_edge(self, u, v):
        return v in self._adjset.get(u, ())

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        for u in self.vertices:
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def name_of(self, v):
        if self.names and v in self.names:
            return self.names[v]
        return str(v)

    def closed_neighborhood(self, v):
        """N[v] as a frozenset."""
        if v not in self._vset:
            raise GraphError(f"unknown vertex {v}")
        return frozenset(self._adjset[v]) | {v}

    def induced(self, vertex_set):
        """Subgraph induced by ``vertex_set``; ids and names are preserved."""
        vs = set(vertex_set)
        bad = vs - self._vset
        if bad:
            raise GraphError(f"unknown vertices in induced set: {sorted(bad)}")
        edges = [(u, v) for u in vs for v in self._adjset[u] if u < v and v in vs]
        names = {v: self.names[v] for v in vs if v in self.names} if self.names else None
        return Graph(sorted(vs), edges, names=names)

    def is_clique(self, vertex_set):
        vs = list(vertex_set)
        return all(self.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def shortest_path_avoiding(g, src, dst, forbidden=()):
    """Shortest path from src to dst in g minus ``forbidden``, or None.

    Endpoints must not be forbidden.  A shortest path is induced within the
    searched subgraph, which is what the obstruction constructions rely on.
    """
    forb = set(forbidden)
    if src in forb or dst in forb:
        raise GraphError("path endpoint is forbidden")
    if src == dst:
        return [src]
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in forb or w in prev:
                continue
            prev[w] = u
            if w == dst:
                path = [w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    return None


def connected_components(g, within=None):
    """Partition of the vertex set into components, ordered by smallest member.

    ``within`` restricts the search to a subset of vertices.
    """
    if within is None:
        universe = g.vertices
        member = g._vset
    else:
        member = set(within)
        universe = sorted(member)
    seen = set()
    comps = []
    for s in universe:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in member and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def parse_graph(text):
    """Parse the plain text graph format.

    First non-comment line is ``n m``, then m lines ``u v``.  Vertex names are
    whitespace-free tokens.  If the distinct endpoint names don't cover n
    vertices, the names must all be integers in [0, n) and the vertex set is
    taken to be 0..n-1 (this is how isolated vertices are written).
    Duplicate edges and self-loops are format errors.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError("header must be 'n m'") from None
    if n < 0 or m < 0:
        raise GraphError("negative counts in header")
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    raw_edges = []
    tokens = []
    seen_tok = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        raw_edges.append((parts[0], parts[1]))
        for t in parts:
            if t not in seen_tok:
                seen_tok.add(t)
                tokens.append(t)
    if len(tokens) == n:
        order = sorted(tokens)
        ids = {t: i for i, t in enumerate(order)}
    elif len(tokens) < n and all(_is_index(t, n) for t in tokens):
        ids = {str(i): i for i in range(n)}
        order = [str(i) for i in range(n)]
    else:
        raise GraphError(f"{len(tokens)} distinct vertex names for n={n}")
    edges = [(ids[a], ids[b]) for a, b in raw_edges]
    names = {i: t for t, i in ids.items()}
    return Graph(range(n), edges, names=names)


def _is_index(tok, n):
    try:
        x = int(tok)
    except ValueError:
        return False
    return 0 <= x < n and str(x) == tok


def format_graph(g):
    out = [f"{g.n} {g.edge_count}"]
    for u, v in g.edges():
        out.append(f"{g.name_of(u)} {g.name_of(v)}")
    return "\n".join(out) + "\n"
