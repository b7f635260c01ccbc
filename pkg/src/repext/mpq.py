"""MPQ-trees: PQ-trees annotated with vertex sections.

The PQ-tree is built by iterative reduction: for each vertex, the set of
maximal cliques containing it is forced to be consecutive.  Sections are
annotated afterwards: a vertex lands at the unique node where its clique set
stops being an entire subtree (a P-node's whole subtree, or a consecutive run
of a Q-node's children).

P-node children may be permuted freely, Q-node children only reversed; the
frontiers reachable this way are exactly the consecutive orderings of the
maximal cliques.
"""

from itertools import permutations


class ConsecutivityError(Exception):
    """The clique hypergraph has no consecutive arrangement (not interval)."""


EMPTY, FULL, PARTIAL = 0, 1, 2


class _Node:
    __slots__ = ("kind", "children", "parent", "clique", "nleaves")

    def __init__(self, kind, children=(), clique=None):
        self.kind = kind  # 'leaf' | 'p' | 'q'
        self.children = list(children)
        self.parent = None
        self.clique = clique
        self.nleaves = 1 if kind == "leaf" else sum(c.nleaves for c in children)
        for c in self.children:
            c.parent = self

    def relink(self):
        self.nleaves = 1 if self.kind == "leaf" else sum(c.nleaves for c in self.children)
        for c in self.children:
            c.parent = self


def _make_p(children):
    if len(children) == 1:
        return children[0]
    return _Node("p", children)


def _make_q(children):
    if len(children) == 1:
        return children[0]
    if len(children) == 2:
        return _Node("p", children)
    return _Node("q", children)


class _PQTree:
    def __init__(self, nleaves):
        self.leaves = [_Node("leaf", clique=i) for i in range(nleaves)]
        if nleaves == 0:
            self.root = None
        elif nleaves == 1:
            self.root = self.leaves[0]
        else:
            self.root = _Node("p", self.leaves)

    def reduce(self, leaf_ids):
        """Force the given leaves to be consecutive in every frontier."""
        want = len(leaf_ids)
        if want <= 1 or want == len(self.leaves):
            return
        counts = {}
        for lid in leaf_ids:
            node = self.leaves[lid]
            while node is not None:
                counts[id(node)] = counts.get(id(node), 0) + 1
                node = node.parent
        # pertinent root: lowest ancestor holding all marked leaves
        node = self.leaves[leaf_ids[0]]
        while counts[id(node)] < want:
            node = node.parent
        pertinent = node
        if counts[id(pertinent)] == pertinent.nleaves:
            return  # the marked set is a whole subtree
        state, replacement = self._reduce_node(pertinent, counts, at_root=True)
        assert state == PARTIAL or replacement is pertinent
        if replacement is not pertinent:
            parent = pertinent.parent
            if parent is None:
                self.root = replacement
                replacement.parent = None
            else:
                i = parent.children.index(pertinent)
                parent.children[i] = replacement
                replacement.parent = parent

    def _classify(self, node, counts):
        c = counts.get(id(node), 0)
        if c == 0:
            return EMPTY
        if c == node.nleaves:
            return FULL
        return PARTIAL

    def _reduce_node(self, node, counts, at_root):
        """Rearrange ``node`` so marked leaves become consecutive.

        Internal (non-root) calls must leave the marked run at one end; they
        return (PARTIAL, seq) where seq is the list of subtrees that replaces
        the node inside an enclosing Q-node, full part first.  Root calls
        return (PARTIAL, replacement_node).
        """
        if node.kind == "leaf":
            raise ConsecutivityError("partial leaf")  # cannot happen
        states = [self._classify(c, counts) for c in node.children]
        if node.kind == "p":
            return self._reduce_p(node, counts, states, at_root)
        return self._reduce_q(node, counts, states, at_root)

    def _reduce_p(self, node, counts, states, at_root):
        empties = [c for c, s in zip(node.children, states) if s == EMPTY]
        fulls = [c for c, s in zip(node.children, states) if s == FULL]
        partials = [c for c, s in zip(node.children, states) if s == PARTIAL]
        if len(partials) > (2 if at_root else 1):
            raise ConsecutivityError("too many partial children of a P-node")
        part_seqs = [self._reduce_node(c, counts, at_root=False)[1] for c in partials]

        if at_root:
            if not part_seqs:
                # group the full children so they stay together
                assert fulls and empties
                grp = _make_p(fulls)
                node.children = empties + [grp]
                node.relink()
                return PARTIAL, node
            mid = list(reversed(part_seqs[0]))  # empties first, fulls last
            if fulls:
                mid.append(_make_p(fulls))
            if len(part_seqs) == 2:
                mid.extend(part_seqs[1])  # fulls first, empties last
            qnode = _make_q(mid)
            if empties:
                node.children = empties + [qnode]
                node.relink()
                return PARTIAL, node
            qnode.relink()
            return PARTIAL, qnode

        seq = []
        if fulls:
            seq.append(_make_p(fulls))
        if part_seqs:
            seq.extend(part_seqs[0])
        if empties:
            seq.append(_make_p(empties))
        return PARTIAL, seq

    def _reduce_q(self, node, counts, states, at_root):
        kids = node.children
        nonempty = [i for i, s in enumerate(states) if s != EMPTY]
        assert nonempty
        lo, hi = nonempty[0], nonempty[-1]
        if hi - lo + 1 != len(nonempty):
            raise ConsecutivityError("marked run of a Q-node is not contiguous")
        for i in range(lo + 1, hi):
            if states[i] != FULL:
                raise ConsecutivityError("partial child inside a Q-node run")
        if not at_root:
            # the run must touch one end; orient it to the left
            if lo != 0 and hi != len(kids) - 1:
                raise ConsecutivityError("marked run not at the end of a Q-node")
            if lo != 0:
                kids.reverse()
                states.reverse()
                nonempty = [len(kids) - 1 - i for i in reversed(nonempty)]
                lo, hi = nonempty[0], nonempty[-1]
            # pattern: F* P? E*
            if any(s == PARTIAL for s in states[:hi]):
                raise ConsecutivityError("partial child inside a Q-node run")
            seq = list(kids[:hi])
            if states[hi] == PARTIAL:
                _, pseq = self._reduce_node(kids[hi], counts, at_root=False)
                seq.extend(pseq)
            else:
                seq.append(kids[hi])
            seq.extend(kids[hi + 1:])
            return PARTIAL, seq

        # root: pattern E* P? F* P? E*
        newkids = list(kids[:lo])
        if states[lo] == PARTIAL:
            _, pseq = self._reduce_node(kids[lo], counts, at_root=False)
            newkids.extend(reversed(pseq))  # fulls point right, toward the run
        else:
            newkids.append(kids[lo])
        for i in range(lo + 1, hi):
            newkids.append(kids[i])
        if hi > lo:
            if states[hi] == PARTIAL:
                _, pseq = self._reduce_node(kids[hi], counts, at_root=False)
                newkids.extend(pseq)  # fulls point left, toward the run
            else:
                newkids.append(kids[hi])
        newkids.extend(kids[hi + 1:])
        node.children = newkids
        node.relink()
        return PARTIAL, node


class MPQTree:
    """Frozen MPQ-tree over a fixed clique list.

    Node ids index ``kind``, ``children``, ``sections``:
      - leaf: sections[i] is one vertex set, clique_of[i] the clique id
      - P-node: sections[i] is one vertex set
      - Q-node: sections[i] is a list of vertex sets, one per child
    ``placement`` maps each vertex to (node_id, lo, hi): for Q-nodes the
    inclusive child-index span of its sections, otherwise (0, 0).
    """

    def __init__(self, cliques, root, nodes):
        self.cliques = cliques
        self.root = root
        self.kind = [n["kind"] for n in nodes]
        self.children = [n["children"] for n in nodes]
        self.clique_of = [n.get("clique") for n in nodes]
        self.sections = [n["sections"] for n in nodes]
        self.parent = [None] * len(nodes)
        self.index_in_parent = [None] * len(nodes)
        for nid, ch in enumerate(self.children):
            for i, c in enumerate(ch):
                self.parent[c] = nid
                self.index_in_parent[c] = i
        self.placement = {}
        for nid in range(len(nodes)):
            if self.kind[nid] == "q":
                for i, sec in enumerate(self.sections[nid]):
                    for v in sec:
                        if v in self.placement and self.placement[v][0] == nid:
                            _, lo, hi = self.placement[v]
                            self.placement[v] = (nid, min(lo, i), max(hi, i))
                        else:
                            self.placement[v] = (nid, i, i)
            else:
                for v in self.sections[nid]:
                    self.placement[v] = (nid, 0, 0)

    # -- basic queries ---------------------------------------------------

    def node_count(self):
        return len(self.kind)

    def frontier(self, node=None):
        """Clique ids of the leaves, left to right."""
        if self.root is None:
            return []
        if node is None:
            node = self.root
        out = []
        stack = [node]
        while stack:
            nid = stack.pop()
            if self.kind[nid] == "leaf":
                out.append(self.clique_of[nid])
            else:
                stack.extend(reversed(self.children[nid]))
        return out

    def subtree_vertices(self, node):
        """Vertices in the sections of the subtree rooted at ``node``."""
        out = set()
        stack = [node]
        while stack:
            nid = stack.pop()
            if self.kind[nid] == "q":
                for sec in self.sections[nid]:
                    out |= sec
            else:
                out |= self.sections[nid]
            stack.extend(self.children[nid])
        return out

    def subtree_clique_ids(self, node):
        return self.frontier(node)

    def child_of_containing(self, q, node):
        """Index of q's child whose subtree contains ``node``."""
        cur = node
        while cur is not None and self.parent[cur] != q:
            cur = self.parent[cur]
        if cur is None:
            raise ValueError("node not below the given Q-node")
        return self.index_in_parent[cur]

    def section_span(self, q, u):
        """(leftmost, rightmost) section indices of u in Q-node q.

        A vertex living inside child subtree i reports (i, i).
        """
        if self.kind[q] != "q":
            raise ValueError("section_span needs a Q-node")
        nid, lo, hi = self.placement[u]
        if nid == q:
            return lo, hi
        i = self.child_of_containing(q, nid)
        return i, i

    def in_subtree(self, q, u):
        nid = self.placement[u][0]
        cur = nid
        while cur is not None:
            if cur == q:
                return True
            cur = self.parent[cur]
        return False

    def is_q_monotone(self, q, path):
        """True iff all inner path vertices sit in sections of q with
        strictly increasing spans."""
        inner = path[1:-1]
        prev = None
        for v in inner:
            nid, lo, hi = self.placement[v]
            if nid != q:
                return False
            if prev is not None and not (lo > prev[0] and hi > prev[1]):
                return False
            prev = (lo, hi)
        return True

    # -- equivalence enumeration (small trees only) ----------------------

    def enumerate_frontiers(self, limit=50000):
        """All frontiers over P-permutations and Q-reversals."""
        if self.root is None:
            return {()}

        def rec(nid):
            if self.kind[nid] == "leaf":
                return [(self.clique_of[nid],)]
            child_opts = [rec(c) for c in self.children[nid]]
            outs = set()
            if self.kind[nid] == "p":
                for perm in permutations(range(len(child_opts))):
                    for combo in _products([child_opts[i] for i in perm]):
                        outs.add(combo)
                        if len(outs) > limit:
                            raise MemoryError("frontier enumeration too large")
            else:
                for opts in (child_opts, child_opts[::-1]):
                    for combo in _products(opts):
                        outs.add(combo)
            return sorted(outs)

        return set(rec(self.root))

    def dump(self):
        """Indented debug listing with sections."""
        lines = []

        def fmt_set(s):
            return "{" + ",".join(str(v) for v in sorted(s)) + "}"

        def rec(nid, depth):
            pad = "  " * depth
            k = self.kind[nid]
            if k == "leaf":
                lines.append(f"{pad}leaf clique={self.clique_of[nid]} section={fmt_set(self.sections[nid])}")
            elif k == "p":
                lines.append(f"{pad}P section={fmt_set(self.sections[nid])}")
                for c in self.children[nid]:
                    rec(c, depth + 1)
            else:
                secs = " ".join(fmt_set(s) for s in self.sections[nid])
                lines.append(f"{pad}Q sections=[{secs}]")
                for c in self.children[nid]:
                    rec(c, depth + 1)

        rec(self.root, 0) if self.root is not None else lines.append("(empty)")
        return "\n".join(lines) + "\n"


def _products(option_lists):
    """Cartesian product of tuple-lists, concatenating tuples."""
    acc = [()]
    for opts in option_lists:
        acc = [a + o for a in acc for o in opts]
    return acc


def build_mpq(cliques, nvertices=None):
    """Build the MPQ-tree for the given maximal cliques.

    ``cliques`` is a list of vertex frozensets.  Raises ConsecutivityError if
    no consecutive arrangement exists (graph not interval).
    """
    k = len(cliques)
    vertex_cliques = {}
    for ci, c in enumerate(cliques):
        for v in c:
            vertex_cliques.setdefault(v, []).append(ci)
    tree = _PQTree(k)
    for v in sorted(vertex_cliques):
        tree.reduce(vertex_cliques[v])
    return _annotate(tree, cliques, vertex_cliques)


def _annotate(tree, cliques, vertex_cliques):
    """Assign sections and freeze the working tree into an MPQTree."""
    nodes = []
    ids = {}

    def freeze(node):
        for c in node.children:
            freeze(c)
        nid = len(nodes)
        ids[id(node)] = nid
        rec = {"kind": node.kind, "children": [ids[id(c)] for c in node.children]}
        if node.kind == "leaf":
            rec["clique"] = node.clique
            rec["sections"] = set()
        elif node.kind == "p":
            rec["sections"] = set()
        else:
            rec["sections"] = [set() for _ in node.children]
        nodes.append(rec)

    if tree.root is not None:
        freeze(tree.root)
        root = ids[id(tree.root)]
    else:
        root = None

    # leaf counts per node for the placement walk
    nleaves = [0] * len(nodes)
    for nid, rec in enumerate(nodes):
        nleaves[nid] = 1 if rec["kind"] == "leaf" else sum(nleaves[c] for c in rec["children"])
    parent = [None] * len(nodes)
    for nid, rec in enumerate(nodes):
        for c in rec["children"]:
            parent[c] = nid
    leaf_of_clique = {rec["clique"]: nid for nid, rec in enumerate(nodes) if rec["kind"] == "leaf"}

    for v in sorted(vertex_cliques):
        cls = vertex_cliques[v]
        counts = {}
        for ci in cls:
            node = leaf_of_clique[ci]
            while node is not None:
                counts[node] = counts.get(node, 0) + 1
                node = parent[node]
        node = leaf_of_clique[cls[0]]
        while counts[node] < len(cls):
            node = parent[node]
        rec = nodes[node]
        if rec["kind"] == "q":
            hit = [i for i, c in enumerate(rec["children"]) if counts.get(c, 0) > 0]
            lo, hi = hit[0], hit[-1]
            if hi == lo:
                raise AssertionError("vertex span inside a single Q child")
            for i in range(lo, hi + 1):
                c = rec["children"][i]
                if counts.get(c, 0) != nleaves[c]:
                    raise AssertionError("vertex missing from a spanned Q subtree")
                rec["sections"][i].add(v)
        else:
            if counts[node] != nleaves[node]:
                raise AssertionError("vertex set is not a whole P subtree")
            rec["sections"].add(v)

    for rec in nodes:
        if rec["kind"] == "q":
            rec["sections"] = [frozenset(s) for s in rec["sections"]]
        else:
            rec["sections"] = frozenset(rec["sections"])
    return MPQTree(cliques, root, nodes)


def check_invariants(t, g=None):
    """Validate the structural MPQ-tree laws; raises AssertionError."""
    if t.root is None:
        assert not t.cliques
        return
    seen_leaves = [nid for nid in range(t.node_count()) if t.kind[nid] == "leaf"]
    assert sorted(t.clique_of[nid] for nid in seen_leaves) == list(range(len(t.cliques)))
    placed = {}
    for nid in range(t.node_count()):
        k = t.kind[nid]
        if k == "p":
            assert len(t.children[nid]) >= 2, "P-node with < 2 children"
            vs = t.sections[nid]
            for v in vs:
                assert v not in placed
                placed[v] = nid
        elif k == "q":
            ch = t.children[nid]
            secs = t.sections[nid]
            assert len(ch) >= 3, "Q-node with < 3 children"
            assert all(secs), "empty Q section"
            for a, b in zip(secs, secs[1:]):
                assert a & b, "consecutive Q sections must intersect"
            assert len(set(secs)) == len(secs), "equal Q sections"
            spans = {}
            for i, sec in enumerate(secs):
                for v in sec:
                    spans.setdefault(v, []).append(i)
            for v, idxs in spans.items():
                assert idxs == list(range(idxs[0], idxs[-1] + 1)), "non-consecutive sections"
                assert v not in placed
                placed[v] = nid
            # proper-subset law: s_i strictly inside s_{i+1} forces a
            # non-empty section somewhere in subtree i
            for i in range(len(secs) - 1):
                if secs[i] < secs[i + 1]:
                    assert t.subtree_vertices(ch[i]) - _qnode_all(t, nid), \
                        "subset law violated"
        else:
            for v in t.sections[nid]:
                assert v not in placed
                placed[v] = nid
    # clique reconstruction
    for nid in range(t.node_count()):
        if t.kind[nid] != "leaf":
            continue
        members = set(t.sections[nid])
        cur, prev = t.parent[nid], nid
        while cur is not None:
            if t.kind[cur] == "q":
                members |= t.sections[cur][t.index_in_parent[prev]]
            else:
                members |= t.sections[cur]
            prev, cur = cur, t.parent[cur]
        assert members == set(t.cliques[t.clique_of[nid]]), "clique reconstruction failed"


def _qnode_all(t, nid):
    out = set()
    for sec in t.sections[nid]:
        out |= sec
    return out
