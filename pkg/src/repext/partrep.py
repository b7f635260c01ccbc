"""Partial interval representations with exact rational endpoints.

Endpoints are ints or fractions.Fraction; +-infinity shows up only in
derived quantities (open hulls of admissible sets), never in stored
intervals.  Consistency with the graph (pre-drawn intervals intersect iff
the vertices are adjacent) is validated up front and reported as an input
error, never as an obstruction.
"""

import heapq
from fractions import Fraction

NEG_INF = float("-inf")
POS_INF = float("inf")


class FormatError(ValueError):
    """Malformed graph / representation / certificate text."""


class InconsistentInput(ValueError):
    """Pre-drawn intervals do not realize the induced subgraph."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def parse_rational(tok):
    if "/" in tok:
        num, den = tok.split("/", 1)
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad rational {tok!r}") from None
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"bad rational {tok!r}") from None


def format_rational(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


class PartialRepresentation:
    """Map from pre-drawn vertices to closed intervals [l, r], l <= r."""

    def __init__(self, intervals):
        self.intervals = {}
        for v, (l, r) in intervals.items():
            if r < l:
                raise FormatError(f"interval for {v} has r < l")
            self.intervals[v] = (l, r)

    def __contains__(self, v):
        return v in self.intervals

    def __len__(self):
        return len(self.intervals)

    def __eq__(self, other):
        return isinstance(other, PartialRepresentation) and self.intervals == other.intervals

    def vertices(self):
        return sorted(self.intervals)

    def left(self, v):
        return self.intervals[v][0]

    def right(self, v):
        return self.intervals[v][1]

    def interval(self, v):
        return self.intervals[v]

    def covers(self, v, x):
        l, r = self.intervals[v]
        return l <= x <= r

    def restrict(self, keep):
        keep = set(keep)
        return PartialRepresentation({v: iv for v, iv in self.intervals.items() if v in keep})

    def flip(self):
        """Mirror the line: [l, r] becomes [-r, -l].  An involution."""
        return PartialRepresentation({v: (-r, -l) for v, (l, r) in self.intervals.items()})

    def endpoints(self):
        out = set()
        for l, r in self.intervals.values():
            out.add(l)
            out.add(r)
        return sorted(out)


def check_consistency(g, rep):
    """Verify intersect <=> edge over pre-drawn pairs; raise on failure.

    Sweep over endpoints, so the work is near-linear in the number of
    pre-drawn intervals plus their intersecting pairs (each must be an edge,
    so at most the induced edge count before we bail).
    """
    for v in rep.intervals:
        if v not in g:
            raise InconsistentInput(f"pre-drawn vertex {v} not in the graph", witness=(v,))
    pre = rep.vertices()
    preset = set(pre)
    induced_edges = sum(1 for u in pre for w in g.adj[u] if w in preset and u < w)
    by_left = sorted(pre, key=lambda v: (rep.left(v), v))
    active = []  # heap of (right, vertex)
    pairs = 0
    for v in by_left:
        lv = rep.left(v)
        while active and active[0][0] < lv:
            heapq.heappop(active)
        for r, u in active:
            # every active interval intersects v'
            if not g.has_edge(u, v):
                raise InconsistentInput(
                    f"pre-drawn intervals of {u} and {v} intersect but the edge is missing",
                    witness=(u, v),
                )
        pairs += len(active)
        if pairs > induced_edges:
            raise InconsistentInput("more intersecting pairs than induced edges")
        heapq.heappush(active, (rep.right(v), v))
    if pairs != induced_edges:
        # some induced edge has disjoint intervals; find one for the witness
        for u in pre:
            for w in g.adj[u]:
                if w in preset and u < w:
                    if rep.right(u) < rep.left(w) or rep.right(w) < rep.left(u):
                        raise InconsistentInput(
                            f"edge ({u},{w}) but pre-drawn intervals are disjoint",
                            witness=(u, w),
                        )
        raise InconsistentInput("pair count mismatch")


def parse_partrep(text, g):
    """Parse lines ``v l r``; names resolved through the graph's side table."""
    name_to_id = {}
    for v in g.vertices:
        name_to_id[g.name_of(v)] = v
    intervals = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad representation line: {ln!r}")
        name, ltok, rtok = parts
        if name not in name_to_id:
            raise FormatError(f"unknown vertex {name!r} in representation")
        v = name_to_id[name]
        if v in intervals:
            raise FormatError(f"duplicate interval for {name!r}")
        l, r = parse_rational(ltok), parse_rational(rtok)
        if r < l:
            raise FormatError(f"empty interval for {name!r}")
        intervals[v] = (l, r)
    return PartialRepresentation(intervals)


def format_partrep(rep, g):
    lines = []
    for v in rep.vertices():
        l, r = rep.interval(v)
        lines.append(f"{g.name_of(v)} {format_rational(l)} {format_rational(r)}")
    return "\n".join(lines) + ("\n" if lines else "")
