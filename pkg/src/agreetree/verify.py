"""Two independent agreement verifiers for a candidate supertree.

verify_by_clusters applies the definition: restrict the candidate to each
input's label set and compare cluster sets.  verify_by_embedding checks
the topological-embedding characterization instead: map every input label
a to the candidate LCA of its cluster and require that (E2) children map
strictly below their parent and (E3) distinct children land in distinct
child subtrees.  The two must always agree; tests exercise that.
"""

from bisect import bisect_right

from agreetree.errors import LabelUniverseMismatchError
from agreetree.profile import require_normalized, trees_agree_on


class CandidateIndex:
    """Euler tour + sparse-table LCA over a candidate tree.

    Built once per candidate; verifiers run many LCA queries per tree.
    """

    def __init__(self, tree):
        self.tree = tree
        n = len(tree)
        self.tin = [0] * n
        self.tout = [0] * n
        self.depth = [0] * n
        euler = []          # node at each tour step
        clock = 0
        stack = [(tree.root, 0, False)]
        while stack:
            v, d, closing = stack.pop()
            if closing:
                self.tout[v] = clock
                euler.append(v)
                clock += 1
                continue
            self.depth[v] = d
            self.tin[v] = clock
            euler.append(v)
            clock += 1
            stack.append((v, d, True))
            for c in reversed(tree.children[v]):
                stack.append((c, d + 1, False))
        self.euler = euler
        # sparse table of min-depth positions over the euler walk
        m = len(euler)
        depth = self.depth
        table = [list(range(m))]
        span = 1
        while 2 * span <= m:
            prev = table[-1]
            row = [0] * (m - 2 * span + 1)
            for i in range(len(row)):
                a, b = prev[i], prev[i + span]
                row[i] = a if depth[euler[a]] <= depth[euler[b]] else b
            table.append(row)
            span *= 2
        self._sparse = table
        self._children_tins = [
            [self.tin[c] for c in tree.children[v]] for v in range(n)]

    def lca(self, u, v):
        a, b = self.tin[u], self.tin[v]
        if a > b:
            a, b = b, a
        j = (b - a + 1).bit_length() - 1
        row = self._sparse[j]
        x, y = row[a], row[b - (1 << j) + 1]
        e = self.euler
        pos = x if self.depth[e[x]] <= self.depth[e[y]] else y
        return e[pos]

    def lca_many(self, nodes):
        it = iter(nodes)
        cur = next(it)
        for v in it:
            cur = self.lca(cur, v)
        return cur

    def is_strict_ancestor(self, u, v):
        return u != v and self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]

    def child_toward(self, u, v):
        """The child of u whose subtree contains v (v strictly below u)."""
        i = bisect_right(self._children_tins[u], self.tin[v]) - 1
        return self.tree.children[u][i]


def _check_universe(profile, candidate):
    if candidate.label_set() != profile.label_universe:
        raise LabelUniverseMismatchError(
            "candidate labels differ from the profile universe "
            "(%d vs %d labels)"
            % (len(candidate.label_set()), len(profile.label_universe)))


def verify_by_clusters(profile, candidate):
    """Definition-level check: candidate restricted to each input's labels
    must reproduce that input's clusters exactly."""
    _check_universe(profile, candidate)
    return all(trees_agree_on(candidate, t) for t in profile.trees)


def compute_embedding(input_tree, candidate, index=None):
    """Map of input label -> candidate node: each label goes to the
    candidate LCA of its input cluster."""
    if index is None:
        index = CandidateIndex(candidate)
    node_of = candidate.node_of_label
    up = {}        # input node -> candidate LCA of its cluster
    for v in input_tree.postorder():
        parts = [node_of[l] for l in input_tree.labels[v]]
        parts.extend(up[c] for c in input_tree.children[v])
        up[v] = index.lca_many(parts)
    return {l: up[input_tree.node_of_label[l]]
            for l in input_tree.node_of_label}


def verify_by_embedding(profile, candidate):
    """Embedding-level check (inputs must be fully and singly labeled)."""
    _check_universe(profile, candidate)
    require_normalized(profile)
    index = CandidateIndex(candidate)
    for t in profile.trees:
        phi = compute_embedding(t, candidate, index)
        for v in range(len(t)):
            (a,) = t.labels[v]
            ua = phi[a]
            taken = {}
            for c in t.children[v]:
                (b,) = t.labels[c]
                ub = phi[b]
                if not index.is_strict_ancestor(ua, ub):
                    return False                       # E2
                arm = index.child_toward(ua, ub)
                if arm in taken:
                    return False                       # E3
                taken[arm] = b
    return True
