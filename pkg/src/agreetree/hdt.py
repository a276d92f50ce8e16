"""Poly-logarithmic decremental connectivity (spanning-forest levels).

Every edge carries a level; forest F_i holds the spanning-forest edges of
level >= i, each maintained as an Euler tour forest.  Deleting a non-tree
edge is trivial.  Deleting a tree edge at level L cuts it out of levels
0..L and then searches levels L..0 for a replacement: the smaller side of
the broken tree first pushes its level-i tree edges one level up, then
scans its level-i non-tree edges, either promoting them or reconnecting
the two sides.  Each edge rises at most log2(n) levels, which gives the
amortized O(log^2 n) deletion bound.
"""

from collections import deque

from agreetree.ett import FLAG_NONTREE, FLAG_TREE, EulerForest


def _key(u, v):
    return (u, v) if u <= v else (v, u)


class HdtConnectivity:
    def __init__(self, vertices, adjacency):
        """vertices: iterable of hashable ids; adjacency: v -> iterable of
        neighbors (symmetric, simple)."""
        verts = list(vertices)
        self.levels = [EulerForest()]
        self.tree_adj = [{v: set() for v in verts}]
        self.nontree_adj = [{v: set() for v in verts}]
        self.edge_level = {}
        self.is_tree = {}

        f0 = self.levels[0]
        visited = set()
        for start in verts:
            if start in visited:
                continue
            visited.add(start)
            parent = {start: None}
            order = [start]
            q = deque([start])
            while q:
                x = q.popleft()
                for y in sorted(adjacency[x]):
                    if y not in visited:
                        visited.add(y)
                        parent[y] = x
                        order.append(y)
                        q.append(y)
                    elif parent.get(x) != y and _key(x, y) not in self.edge_level:
                        self.edge_level[_key(x, y)] = 0
                        self.is_tree[_key(x, y)] = False
                        self.nontree_adj[0][x].add(y)
                        self.nontree_adj[0][y].add(x)
            for y in order[1:]:
                k = _key(y, parent[y])
                self.edge_level[k] = 0
                self.is_tree[k] = True
                self.tree_adj[0][y].add(parent[y])
                self.tree_adj[0][parent[y]].add(y)
            # emit the Euler tour of this component's spanning tree
            kids = {v: [] for v in order}
            for y in order[1:]:
                kids[parent[y]].append(y)
            tour = []
            stack = [(start, iter(kids[start]))]
            tour.append((start, start))
            while stack:
                v, it = stack[-1]
                c = next(it, None)
                if c is None:
                    stack.pop()
                    if stack:
                        tour.append((v, stack[-1][0]))
                else:
                    tour.append((v, c))
                    tour.append((c, c))
                    stack.append((c, iter(kids[c])))
            root = f0.build_tour(tour)
            for v in order:
                bits = (FLAG_TREE if self.tree_adj[0][v] else 0) | \
                       (FLAG_NONTREE if self.nontree_adj[0][v] else 0)
                f0.refresh_flags(v, bits)
            f0.rebuild_aggregates(root)

    # -- helpers -------------------------------------------------------------

    def _ensure_level(self, i):
        while len(self.levels) <= i:
            self.levels.append(EulerForest())
            self.tree_adj.append({})
            self.nontree_adj.append({})

    def _adj_add(self, table, i, v, w, flag):
        forest = self.levels[i]
        s = table[i].get(v)
        if s is None:
            s = table[i][v] = set()
        s.add(w)
        if len(s) == 1:
            forest.set_flag(v, flag, True)

    def _adj_remove(self, table, i, v, w, flag):
        s = table[i][v]
        s.discard(w)
        if not s:
            self.levels[i].set_flag(v, flag, False)

    def connected(self, u, v):
        return self.levels[0].same_tree(u, v)

    def component_size(self, v):
        return self.levels[0].tree_size(v)

    def component_members(self, v):
        f0 = self.levels[0]
        return f0.tree_vertices(f0.tree_root(v))

    # -- deletion --------------------------------------------------------------

    def delete_edge(self, u, v):
        """Delete edge {u,v}.  Returns None while the endpoints stay
        connected, else the vertex list of the smaller resulting component
        (ties go to v's side)."""
        k = _key(u, v)
        lev = self.edge_level.pop(k)
        if not self.is_tree.pop(k):
            self._adj_remove(self.nontree_adj, lev, u, v, FLAG_NONTREE)
            self._adj_remove(self.nontree_adj, lev, v, u, FLAG_NONTREE)
            return None

        self._adj_remove(self.tree_adj, lev, u, v, FLAG_TREE)
        self._adj_remove(self.tree_adj, lev, v, u, FLAG_TREE)
        for i in range(lev + 1):
            self.levels[i].cut(u, v)

        for i in range(lev, -1, -1):
            if self._reconnect_at_level(i, u, v):
                return None

        # permanent split: report the smaller side at level 0; ties go to
        # v's side (delete_label passes the surviving neighbor as v)
        f0 = self.levels[0]
        ru = f0.tree_root(u)
        rv = f0.tree_root(v)
        small = ru if ru.cnt < rv.cnt else rv
        return f0.tree_vertices(small)

    def _reconnect_at_level(self, i, u, v):
        forest = self.levels[i]
        su = forest.tree_size(u)
        sv = forest.tree_size(v)
        w, other = (u, v) if su <= sv else (v, u)
        self._ensure_level(i + 1)

        # push the small side's level-i tree edges one level up
        while True:
            root = forest.tree_root(w)
            x = forest.find_flagged(root, FLAG_TREE)
            if x is None:
                break
            xv = x.a
            for y in list(self.tree_adj[i].get(xv, ())):
                self._adj_remove(self.tree_adj, i, xv, y, FLAG_TREE)
                self._adj_remove(self.tree_adj, i, y, xv, FLAG_TREE)
                self._adj_add(self.tree_adj, i + 1, xv, y, FLAG_TREE)
                self._adj_add(self.tree_adj, i + 1, y, xv, FLAG_TREE)
                self.edge_level[_key(xv, y)] = i + 1
                self.levels[i + 1].link(xv, y)

        # scan the small side's level-i non-tree edges
        while True:
            root = forest.tree_root(w)
            x = forest.find_flagged(root, FLAG_NONTREE)
            if x is None:
                return False
            xv = x.a
            for y in list(self.nontree_adj[i].get(xv, ())):
                self._adj_remove(self.nontree_adj, i, xv, y, FLAG_NONTREE)
                self._adj_remove(self.nontree_adj, i, y, xv, FLAG_NONTREE)
                if forest.same_tree(y, other):
                    # replacement edge: becomes a tree edge at this level
                    self.edge_level[_key(xv, y)] = i
                    self.is_tree[_key(xv, y)] = True
                    self._adj_add(self.tree_adj, i, xv, y, FLAG_TREE)
                    self._adj_add(self.tree_adj, i, y, xv, FLAG_TREE)
                    for j in range(i + 1):
                        self.levels[j].link(xv, y)
                    return True
                self.edge_level[_key(xv, y)] = i + 1
                self._adj_add(self.nontree_adj, i + 1, xv, y, FLAG_NONTREE)
                self._adj_add(self.nontree_adj, i + 1, y, xv, FLAG_NONTREE)
