"""Per-clique placement constraints derived from the pre-drawn intervals.

For a maximal clique a, its clique-point must land on a point covered by
exactly the pre-drawn intervals of P(a) = pre-drawn members of a.  The set of
such points (the admissible set) is a union of segments whose endpoints come
from the pre-drawn grid.  Cliques are compared through the open hulls of
their admissible sets: a comes before b when hull(a) lies entirely left of
hull(b).  That relation is an interval order and never single-overlaps
(disjoint or nested hulls only), which the obstruction analysis leans on.

All of it is computed from one global sweep: the endpoint grid splits the
line into O(p) elementary pieces with constant coverage, and admissible
pieces of a clique are the pieces inside its window whose coverage equals
|P(a)|.
"""

from bisect import bisect_left, bisect_right
from fractions import Fraction

from .graph import shortest_path_avoiding
from .partrep import NEG_INF, POS_INF


class Segment:
    """One maximal admissible segment with open/closed ends."""

    __slots__ = ("lo", "lo_closed", "hi", "hi_closed")

    def __init__(self, lo, lo_closed, hi, hi_closed):
        self.lo = lo
        self.lo_closed = lo_closed
        self.hi = hi
        self.hi_closed = hi_closed

    def contains(self, x):
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        if x > self.hi or (x == self.hi and not self.hi_closed):
            return False
        return True

    def __eq__(self, other):
        return (self.lo, self.lo_closed, self.hi, self.hi_closed) == \
            (other.lo, other.lo_closed, other.hi, other.hi_closed)

    def __repr__(self):
        lb = "[" if self.lo_closed else "("
        rb = "]" if self.hi_closed else ")"
        return f"{lb}{self.lo}, {self.hi}{rb}"


class CliqueContext:
    """Admissible sets, open hulls and the precedence relation for one
    (graph, cliques, partial representation) triple."""

    def __init__(self, g, cliques, rep):
        self.g = g
        self.cliques = cliques
        self.rep = rep
        pts = rep.endpoints()
        self.pts = pts
        q = len(pts)
        self.npieces = 2 * q + 1
        pos = {x: i for i, x in enumerate(pts)}
        cov = [0] * (self.npieces + 1)
        for v in rep.intervals:
            l, r = rep.interval(v)
            cov[2 * pos[l] + 1] += 1
            cov[2 * pos[r] + 2] -= 1
        for i in range(1, self.npieces):
            cov[i] += cov[i - 1]
        self.cov = cov[: self.npieces]
        self.buckets = {}
        for p, c in enumerate(self.cov):
            self.buckets.setdefault(c, []).append(p)
        self._pos = pos

        self.predrawn = [frozenset(v for v in c if v in rep.intervals) for c in cliques]
        self._window = []
        for a, pset in enumerate(self.predrawn):
            if not pset:
                self._window.append((0, self.npieces - 1, NEG_INF, POS_INF))
            else:
                wl = max(rep.left(v) for v in pset)
                wr = min(rep.right(v) for v in pset)
                if wr < wl:
                    raise AssertionError("clique members without a common point")
                self._window.append((2 * pos[wl] + 1, 2 * pos[wr] + 1, wl, wr))
        self._hull = [None] * len(cliques)

    # -- elementary pieces ------------------------------------------------

    def _piece_inf(self, p):
        if p % 2:
            return self.pts[(p - 1) // 2]
        j = p // 2
        return self.pts[j - 1] if j > 0 else NEG_INF

    def _piece_sup(self, p):
        if p % 2:
            return self.pts[(p - 1) // 2]
        j = p // 2
        return self.pts[j] if j < len(self.pts) else POS_INF

    def _first_piece_after(self, x):
        """Smallest piece index holding some point > x."""
        if not self.pts or x < self.pts[0]:
            return 0
        return 2 * bisect_right(self.pts, x)

    # -- spec surface -----------------------------------------------------

    def predrawn_set(self, a):
        return self.predrawn[a]

    def min_right(self, a):
        """Pre-drawn members of a whose right endpoint is leftmost."""
        pset = self.predrawn[a]
        wr = self._window[a][3]
        return sorted(v for v in pset if self.rep.right(v) == wr)

    def max_left(self, a):
        pset = self.predrawn[a]
        wl = self._window[a][2]
        return sorted(v for v in pset if self.rep.left(v) == wl)

    def admissible_set(self, a):
        """Maximal admissible segments of clique a, sorted left to right."""
        lo_p, hi_p, _, _ = self._window[a]
        target = len(self.predrawn[a])
        segs = []
        run = None
        for p in range(lo_p, hi_p + 1):
            if self.cov[p] == target:
                if run is None:
                    run = [p, p]
                else:
                    run[1] = p
            elif run is not None:
                segs.append(self._run_to_segment(run))
                run = None
        if run is not None:
            segs.append(self._run_to_segment(run))
        return segs

    def _run_to_segment(self, run):
        p0, p1 = run
        lo = self._piece_inf(p0)
        hi = self._piece_sup(p1)
        return Segment(lo, p0 % 2 == 1, hi, p1 % 2 == 1)

    def hull(self, a):
        """(inf, sup, empty) of the admissible set; hull is an open interval."""
        if self._hull[a] is None:
            lo_p, hi_p, _, _ = self._window[a]
            target = len(self.predrawn[a])
            bucket = self.buckets.get(target, ())
            i = bisect_left(bucket, lo_p)
            if i == len(bucket) or bucket[i] > hi_p:
                self._hull[a] = (POS_INF, NEG_INF, True)
            else:
                j = bisect_right(bucket, hi_p) - 1
                self._hull[a] = (self._piece_inf(bucket[i]), self._piece_sup(bucket[j]), False)
        return self._hull[a]

    def inf(self, a):
        return self.hull(a)[0]

    def sup(self, a):
        return self.hull(a)[1]

    def empty(self, a):
        return self.hull(a)[2]

    def before(self, a, b):
        """The precedence relation: hull(a) entirely left of hull(b); a
        relates to itself exactly when its admissible set is empty."""
        if a == b:
            return self.empty(a)
        return self.sup(a) <= self.inf(b)

    def first_point_after(self, a, prev):
        """Leftmost admissible point of a strictly right of prev, or None.

        prev is NEG_INF for an unconstrained query.  Open segments yield an
        interior rational: lo+1 against an unbounded right end, the midpoint
        otherwise.
        """
        lo_p, hi_p, _, _ = self._window[a]
        target = len(self.predrawn[a])
        bucket = self.buckets.get(target, ())
        start = max(lo_p, self._first_piece_after(prev))
        i = bisect_left(bucket, start)
        if i == len(bucket) or bucket[i] > hi_p:
            return None
        p0 = bucket[i]
        # maximal admissible run around p0 (cheap: runs are short in practice)
        p1 = p0
        while p1 + 1 <= hi_p and self.cov[p1 + 1] == target:
            p1 += 1
        pl = p0
        while pl - 1 >= lo_p and self.cov[pl - 1] == target:
            pl -= 1
        seg = self._run_to_segment([pl, p1])
        return _pick_point(seg, prev)

    # -- sliding ----------------------------------------------------------

    def slide(self, a, b, r):
        """Trade a nested pre-drawn interval for one covering the window end.

        Preconditions: hull(a) left of hull(b), P(a) strictly inside P(b),
        r in P(b) \\ P(a).  Returns (z, path) with z pre-drawn, not in P(a),
        covering r(u) for the smallest-id u among min_right(a), and an
        induced path r -> z of pre-drawn vertices outside P(a).
        """
        self._check_slide_pre(a, b, r)
        u = self.min_right(a)[0]
        x = self.rep.right(u)
        z = self._best_cover(x, self.predrawn[a], prefer_right=True)
        if z is None:
            raise AssertionError("sliding found no covering interval")
        path = self._predrawn_path(r, z, self.predrawn[a])
        return z, path

    def slide_flipped(self, a, b, r):
        """Mirror image: z covers l(u) for u among max_left(a); hull(a) must
        be right of hull(b)."""
        if not self.before(b, a):
            raise ValueError("slide_flipped: hull(a) must lie right of hull(b)")
        if not (self.predrawn[a] < self.predrawn[b]):
            raise ValueError("slide: P(a) must be strictly inside P(b)")
        if r not in self.predrawn[b] or r in self.predrawn[a]:
            raise ValueError("slide: r must be in P(b) \\ P(a)")
        u = self.max_left(a)[0]
        x = self.rep.left(u)
        z = self._best_cover(x, self.predrawn[a], prefer_right=False)
        if z is None:
            raise AssertionError("sliding found no covering interval")
        path = self._predrawn_path(r, z, self.predrawn[a])
        return z, path

    def _check_slide_pre(self, a, b, r):
        if not self.before(a, b):
            raise ValueError("slide: hull(a) must lie left of hull(b)")
        if not (self.predrawn[a] < self.predrawn[b]):
            raise ValueError("slide: P(a) must be strictly inside P(b)")
        if r not in self.predrawn[b] or r in self.predrawn[a]:
            raise ValueError("slide: r must be in P(b) \\ P(a)")

    def _best_cover(self, x, excluded, prefer_right):
        best = None
        for v in self.rep.intervals:
            if v in excluded or not self.rep.covers(v, x):
                continue
            l, r = self.rep.interval(v)
            key = (-r, v) if prefer_right else (l, v)
            if best is None or key < best[0]:
                best = (key, v)
        return best[1] if best else None

    def _predrawn_path(self, src, dst, excluded):
        allowed = set(self.rep.intervals) - set(excluded)
        forbidden = set(self.g.vertices) - allowed
        path = shortest_path_avoiding(self.g, src, dst, forbidden - {src, dst})
        if path is None:
            raise AssertionError("sliding path missing")
        return path

    # -- structural laws (test support) ------------------------------------

    def check_no_single_overlap(self):
        """Hulls are pairwise disjoint or nested; nesting reverses P-sets."""
        k = len(self.cliques)
        hulls = [(a,) + self.hull(a) for a in range(k)]
        live = [(a, lo, hi) for a, lo, hi, e in hulls if not e]
        for i, (a, alo, ahi) in enumerate(live):
            for b, blo, bhi in live[i + 1:]:
                disjoint = ahi <= blo or bhi <= alo
                a_in_b = blo <= alo and ahi <= bhi
                b_in_a = alo <= blo and bhi <= ahi
                if not (disjoint or a_in_b or b_in_a):
                    raise AssertionError(f"single overlap between hulls of {a} and {b}")
                if a_in_b and not disjoint and not (self.predrawn[a] >= self.predrawn[b]):
                    raise AssertionError(f"hull inclusion without P-set reversal: {a} in {b}")
                if b_in_a and not disjoint and not (self.predrawn[b] >= self.predrawn[a]):
                    raise AssertionError(f"hull inclusion without P-set reversal: {b} in {a}")


def _pick_point(seg, prev):
    """A point of seg strictly right of prev, leftmost by the house rule."""
    lo, hi = seg.lo, seg.hi
    if hi <= prev:
        return None
    if seg.lo_closed and lo > prev:
        return lo
    eff = lo if lo > prev else prev
    # open at eff
    if hi == POS_INF:
        return eff + 1 if eff != NEG_INF else 1
    if eff == NEG_INF:
        return hi - 1
    mid = Fraction(eff + hi, 2) if isinstance(eff + hi, int) else (eff + hi) / 2
    return mid
