"""Semi-labeled rooted trees (X-trees): clusters, restriction, LCA.

A semi-labeled tree maps a label set into the nodes of a rooted tree.
Every node with fewer than two children must carry at least one label;
nodes with two or more children (the root included) may be unlabeled.
Instances hold label *ids* and share a LabelTable with the other trees of
a profile, so equal strings in different trees compare equal by id.
"""

from agreetree.errors import EmptyRestrictionError

# Trees are immutable by convention once built: all surgery returns new
# XTree instances.


class XTree:
    """Rooted tree with per-node label-id sets and a label -> node index."""

    __slots__ = ("table", "parent", "children", "labels", "root",
                 "node_of_label", "_cluster_cache", "_label_cluster_cache")

    def __init__(self, table, parent, children, labels, root, canonical=False):
        self.table = table
        self.parent = parent          # node -> parent node or None
        self.children = children      # node -> list of child nodes
        self.labels = labels          # node -> set of label ids
        self.root = root
        self._cluster_cache = None
        self._label_cluster_cache = {}
        self.node_of_label = {}
        for v, labs in enumerate(labels):
            for l in labs:
                if l in self.node_of_label:
                    raise ValueError("label id %d appears on two nodes" % l)
                self.node_of_label[l] = v
        self._check_structure()
        if not canonical:
            self._canonicalize()

    # -- construction helpers ---------------------------------------------

    @classmethod
    def single_node(cls, table, label_ids):
        return cls(table, [None], [[]], [set(label_ids)], 0)

    def _check_structure(self):
        n = len(self.parent)
        if not (0 <= self.root < n) or self.parent[self.root] is not None:
            raise ValueError("bad root")
        seen = 0
        stack = [self.root]
        while stack:
            v = stack.pop()
            seen += 1
            for c in self.children[v]:
                if self.parent[c] != v:
                    raise ValueError("parent/children mismatch at node %d" % c)
                stack.append(c)
        if seen != n:
            raise ValueError("tree is not connected or has a cycle")

    def _canonicalize(self):
        # Children ordered by the minimum label id in their subtree; makes
        # traversal and serialization deterministic.  Unlabeled subtrees
        # cannot occur (leaves are always labeled).
        minlab = [None] * len(self.parent)
        for v in self.postorder():
            best = min(self.labels[v]) if self.labels[v] else None
            for c in self.children[v]:
                if minlab[c] is not None and (best is None or minlab[c] < best):
                    best = minlab[c]
            minlab[v] = best
        big = 1 << 60
        for v in range(len(self.parent)):
            if len(self.children[v]) > 1:
                self.children[v].sort(key=lambda c: big if minlab[c] is None else minlab[c])

    # -- basic queries -----------------------------------------------------

    def __len__(self):
        return len(self.parent)

    def n_nodes(self):
        return len(self.parent)

    def label_set(self):
        return frozenset(self.node_of_label)

    def preorder(self):
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def postorder(self):
        order = self.preorder()
        order.reverse()
        return order

    def is_leaf(self, v):
        return not self.children[v]

    def children_labels(self, label_id):
        """Labels directly below the node carrying label_id (singly labeled use)."""
        v = self.node_of_label[label_id]
        out = []
        for c in self.children[v]:
            out.extend(self.labels[c])
        return out

    def is_fully_labeled(self):
        return all(self.labels[v] for v in range(len(self.parent)))

    def is_singly_labeled(self):
        return all(len(self.labels[v]) <= 1 for v in range(len(self.parent)))

    def low_degree_unlabeled(self):
        """Nodes that violate the semi-labeled rule: unlabeled with < 2 children."""
        return [v for v in range(len(self.parent))
                if not self.labels[v] and len(self.children[v]) < 2]

    # -- clusters -----------------------------------------------------------

    def cluster_of_node(self, v):
        """Label set of the subtree rooted at v."""
        acc = set()
        stack = [v]
        while stack:
            u = stack.pop()
            acc.update(self.labels[u])
            stack.extend(self.children[u])
        return frozenset(acc)

    def cluster_of_label(self, label_id):
        got = self._label_cluster_cache.get(label_id)
        if got is None:
            got = self.cluster_of_node(self.node_of_label[label_id])
            self._label_cluster_cache[label_id] = got
        return got

    def clusters(self):
        """Set of all clusters (duplicates collapse: it is a set of sets)."""
        if self._cluster_cache is None:
            acc = [None] * len(self.parent)
            for v in self.postorder():
                s = set(self.labels[v])
                for c in self.children[v]:
                    s.update(acc[c])
                acc[v] = s
            self._cluster_cache = frozenset(frozenset(s) for s in acc)
        return self._cluster_cache

    # -- LCA ----------------------------------------------------------------

    def depths(self):
        d = [0] * len(self.parent)
        for v in self.preorder():
            p = self.parent[v]
            if p is not None:
                d[v] = d[p] + 1
        return d

    def lca(self, items, by_label=True):
        """Deepest common ancestor of the given labels (or node indices)."""
        nodes = [self.node_of_label[x] for x in items] if by_label else list(items)
        if not nodes:
            raise ValueError("lca of empty set")
        depth = self.depths()
        cur = nodes[0]
        for v in nodes[1:]:
            a, b = cur, v
            while depth[a] > depth[b]:
                a = self.parent[a]
            while depth[b] > depth[a]:
                b = self.parent[b]
            while a != b:
                a = self.parent[a]
                b = self.parent[b]
            cur = a
        return cur

    # -- restriction ---------------------------------------------------------

    def restrict(self, keep):
        """Restriction to the label set `keep`, by tree surgery.

        Drops labels outside `keep`, then repeatedly removes unlabeled
        leaves and splices out unlabeled single-child nodes (an unlabeled
        root with one child is replaced by that child).  The cluster set of
        the result equals {W & keep : W in clusters, W & keep nonempty}.
        """
        keep = set(keep)
        if not (keep & set(self.node_of_label)):
            raise EmptyRestrictionError("restriction misses the tree entirely")
        n = len(self.parent)
        new_labels = [self.labels[v] & keep for v in range(n)]
        alive = [True] * n
        parent = list(self.parent)
        children = [list(cs) for cs in self.children]

        for v in self.postorder():
            if new_labels[v]:
                continue
            if not children[v]:                      # unlabeled leaf: drop
                alive[v] = False
                p = parent[v]
                if p is not None:
                    children[p].remove(v)
            elif len(children[v]) == 1:              # unlabeled unary: splice
                alive[v] = False
                c = children[v][0]
                p = parent[v]
                parent[c] = p
                if p is not None:
                    children[p][children[p].index(v)] = c

        root = self.root
        if not alive[root]:
            # spliced root: the surviving child took over
            root = next(v for v in range(n) if alive[v] and parent[v] is None)

        remap = {}
        for v in range(n):
            if alive[v]:
                remap[v] = len(remap)
        return XTree(
            self.table,
            [None if parent[v] is None or not alive[parent[v]] else remap[parent[v]]
             for v in range(n) if alive[v]],
            [[remap[c] for c in children[v]] for v in range(n) if alive[v]],
            [new_labels[v] for v in range(n) if alive[v]],
            remap[root],
        )

    # -- misc -----------------------------------------------------------------

    def relabeled_copy(self, new_labels):
        """Copy with node -> label-set replaced wholesale (same topology)."""
        return XTree(self.table, list(self.parent),
                     [list(cs) for cs in self.children],
                     [set(s) for s in new_labels], self.root)

    def __repr__(self):
        from agreetree.newick import serialize_newick
        return "XTree(%s)" % serialize_newick(self)


def restriction_clusters(tree, keep):
    """Cluster set of tree|keep straight from the definition (no surgery)."""
    keep = frozenset(keep)
    out = set()
    for w in tree.clusters():
        inter = w & keep
        if inter:
            out.add(inter)
    return out
