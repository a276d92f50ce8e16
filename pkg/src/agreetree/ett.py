"""Euler tour forests over splay trees.

Each tree of a forest is kept as the sequence of its Euler tour: one
self-loop node per vertex plus two arc nodes per tree edge.  Splay trees
give amortized O(log n) link, cut, reroot, size and root queries, plus a
subtree-OR of per-vertex flag bits used to locate vertices that still
carry edges of a given kind.
"""

FLAG_TREE = 1
FLAG_NONTREE = 2


class TourNode:
    __slots__ = ("left", "right", "parent", "sz", "cnt", "flags", "sub",
                 "loop", "a", "b")

    def __init__(self, a, b):
        self.left = self.right = self.parent = None
        self.a = a
        self.b = b
        self.loop = a == b
        self.flags = 0
        self.sub = 0
        self.sz = 1
        self.cnt = 1 if self.loop else 0

    def __repr__(self):
        return "loop(%r)" % (self.a,) if self.loop else "arc(%r,%r)" % (self.a, self.b)


def _pull(x):
    sz = 1
    cnt = 1 if x.loop else 0
    sub = x.flags
    l, r = x.left, x.right
    if l is not None:
        sz += l.sz
        cnt += l.cnt
        sub |= l.sub
    if r is not None:
        sz += r.sz
        cnt += r.cnt
        sub |= r.sub
    x.sz = sz
    x.cnt = cnt
    x.sub = sub


def _rotate(x):
    p = x.parent
    g = p.parent
    if p.left is x:
        p.left = x.right
        if x.right is not None:
            x.right.parent = p
        x.right = p
    else:
        p.right = x.left
        if x.left is not None:
            x.left.parent = p
        x.left = p
    p.parent = x
    x.parent = g
    if g is not None:
        if g.left is p:
            g.left = x
        else:
            g.right = x
    _pull(p)
    _pull(x)


def splay(x):
    while x.parent is not None:
        p = x.parent
        g = p.parent
        if g is not None:
            if (g.left is p) == (p.left is x):
                _rotate(p)      # zig-zig
            else:
                _rotate(x)      # zig-zag
        _rotate(x)
    return x


def merge(a, b):
    """Concatenate two sequences given by their roots (either may be None)."""
    if a is None:
        return b
    if b is None:
        return a
    while a.right is not None:
        a = a.right
    splay(a)
    a.right = b
    b.parent = a
    _pull(a)
    return a


def split_before(x):
    """Sever into (prefix strictly before x, suffix starting at x)."""
    splay(x)
    l = x.left
    if l is not None:
        l.parent = None
        x.left = None
        _pull(x)
    return l, x


def split_after(x):
    """Sever into (prefix ending at x, suffix strictly after x)."""
    splay(x)
    r = x.right
    if r is not None:
        r.parent = None
        x.right = None
        _pull(x)
    return x, r


class EulerForest:
    """Forest of Euler tours keyed by vertex; one instance per edge level."""

    def __init__(self):
        self.loop = {}
        self.arc = {}

    def has_vertex(self, v):
        return v in self.loop

    def ensure_vertex(self, v):
        node = self.loop.get(v)
        if node is None:
            node = TourNode(v, v)
            self.loop[v] = node
        return node

    def tree_root(self, v):
        return splay(self.loop[v])

    def tree_size(self, v):
        return splay(self.loop[v]).cnt

    def same_tree(self, u, v):
        if u == v:
            return True
        x = self.loop.get(u)
        y = self.loop.get(v)
        if x is None or y is None:
            return False
        splay(x)
        splay(y)
        return x.parent is not None

    def reroot(self, v):
        """Rotate the tour of v's tree so it starts at v's loop; returns root."""
        lv = self.ensure_vertex(v)
        pre, rest = split_before(lv)
        return merge(rest, pre)

    def link(self, u, v):
        """Join the trees of u and v with a new edge; they must differ."""
        ru = self.reroot(u)
        rv = self.reroot(v)
        euv = TourNode(u, v)
        evu = TourNode(v, u)
        self.arc[(u, v)] = euv
        self.arc[(v, u)] = evu
        merge(merge(merge(ru, euv), rv), evu)

    def cut(self, u, v):
        """Remove edge {u,v}; the tours of the two sides separate."""
        e1 = self.arc.pop((u, v))
        e2 = self.arc.pop((v, u))
        splay(e1)
        r1 = e1.left.sz if e1.left is not None else 0
        splay(e2)
        r2 = e2.left.sz if e2.left is not None else 0
        if r1 > r2:
            e1, e2 = e2, e1
        # sequence is  A e1 B e2 C : B is the tour bracketed by the arcs
        a_part, rest = split_before(e1)
        _, rest = split_after(e1)
        b_part, rest = split_before(e2)
        _, c_part = split_after(e2)
        merge(a_part, c_part)

    def find_flagged(self, root, bit):
        """Some loop node with the flag bit set inside root's tree, or None."""
        x = root
        if not x.sub & bit:
            return None
        while True:
            l = x.left
            if l is not None and l.sub & bit:
                x = l
                continue
            if x.loop and x.flags & bit:
                return splay(x)
            x = x.right

    def set_flag(self, v, bit, on):
        x = self.ensure_vertex(v)
        new = (x.flags | bit) if on else (x.flags & ~bit)
        if new != x.flags:
            x.flags = new
            _pull(x)
            splay(x)

    def tree_vertices(self, root):
        """All vertex ids in root's tree, in tour order."""
        out = []
        stack = []
        x = root
        while stack or x is not None:
            while x is not None:
                stack.append(x)
                x = x.left
            x = stack.pop()
            if x.loop:
                out.append(x.a)
            x = x.right
        return out

    def build_tour(self, seq):
        """Bulk-load one tree from a list of (a, b) tour entries.

        Loop nodes carry pre-set flags via a callback-free convention: the
        caller fixes flags afterwards with refresh_flags.  Returns the root.
        """
        nodes = []
        for a, b in seq:
            node = TourNode(a, b)
            if node.loop:
                self.loop[a] = node
            else:
                self.arc[(a, b)] = node
            nodes.append(node)

        def build(lo, hi):
            if lo > hi:
                return None
            mid = (lo + hi) // 2
            x = nodes[mid]
            l = build(lo, mid - 1)
            r = build(mid + 1, hi)
            x.left = l
            x.right = r
            if l is not None:
                l.parent = x
            if r is not None:
                r.parent = x
            _pull(x)
            return x

        return build(0, len(nodes) - 1)

    def refresh_flags(self, v, bits):
        """Set the exact flag value for v's loop without rebalancing (bulk
        load only; aggregates must be rebuilt afterwards)."""
        x = self.loop[v]
        x.flags = bits

    def rebuild_aggregates(self, root):
        """Recompute sub/sz/cnt bottom-up after bulk flag edits."""
        stack = [(root, False)]
        while stack:
            x, done = stack.pop()
            if x is None:
                continue
            if done:
                _pull(x)
            else:
                stack.append((x, True))
                stack.append((x.left, False))
                stack.append((x.right, False))
