"""Exhaustive agreement decision for small label universes.

Candidate space: every rooted tree whose nodes are labeled by the blocks
of a set partition of the label universe, with every node labeled.  If any
agreement tree exists, one of this shape exists too (an unlabeled node can
always be contracted into a child without disturbing any restriction), so
searching fully labeled candidates decides the question.

Set partitions are enumerated in restricted-growth-string order; the
rooted trees over b blocks come from Pruefer sequences plus a root choice.
Used as the independent correctness oracle for the constructive algorithm,
so the agreement check here goes straight through the cluster definition.
"""

from itertools import product

from agreetree.errors import OracleCapError
from agreetree.profile import normalize_profile, require_normalized
from agreetree.xtree import XTree

DEFAULT_CAP = 6

_shape_cache = {}


def set_partitions(items):
    """All partitions of items, in restricted-growth-string order."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def emit():
        nblocks = max(rgs) + 1
        blocks = [[] for _ in range(nblocks)]
        for x, g in zip(items, rgs):
            blocks[g].append(x)
        return blocks

    while True:
        yield emit()
        # next restricted growth string
        i = n - 1
        while i > 0:
            if rgs[i] <= max(rgs[:i]):
                break
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, n):
            rgs[j] = 0


def rooted_trees(b):
    """Parent arrays of all rooted labeled trees on b nodes.

    Pruefer decoding gives each unrooted labeled tree once; every node
    then serves as root once: b**(b-1) trees in total."""
    if b == 1:
        yield (None,)
        return
    for seq in product(range(b), repeat=b - 2):
        degree = [1] * b
        for x in seq:
            degree[x] += 1
        edges = []
        seq_iter = list(seq) + [b - 1]
        # standard decode: repeatedly join the smallest leaf to the next code entry
        import heapq
        leaves = [x for x in range(b) if degree[x] == 1]
        heapq.heapify(leaves)
        for x in seq_iter[:-1]:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, x))
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        u = heapq.heappop(leaves)
        v = heapq.heappop(leaves)
        edges.append((u, v))
        adj = [[] for _ in range(b)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        for root in range(b):
            parent = [None] * b
            order = [root]
            seen = {root}
            qi = 0
            while qi < len(order):
                x = order[qi]
                qi += 1
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        parent[y] = x
                        order.append(y)
            yield tuple(parent)


def _shapes(m):
    """Cached (parent array, block assignment, clusters) for m generic
    labels 0..m-1; clusters are frozensets over the generic labels."""
    got = _shape_cache.get(m)
    if got is not None:
        return got
    shapes = []
    for blocks in set_partitions(range(m)):
        b = len(blocks)
        blocks_f = [frozenset(x) for x in blocks]
        for parent in rooted_trees(b):
            kids = [[] for _ in range(b)]
            root = 0
            for v, p in enumerate(parent):
                if p is None:
                    root = v
                else:
                    kids[p].append(v)
            # postorder cluster accumulation
            clusters = [None] * b
            order = []
            stack = [root]
            while stack:
                x = stack.pop()
                order.append(x)
                stack.extend(kids[x])
            for x in reversed(order):
                acc = set(blocks_f[x])
                for c in kids[x]:
                    acc |= clusters[c]
                clusters[x] = frozenset(acc)
            shapes.append((parent, blocks_f, frozenset(clusters)))
    _shape_cache[m] = shapes
    return shapes


def count_candidates(m):
    return len(_shapes(m))


def enumerate_candidates(labels, table, cap=DEFAULT_CAP):
    """All fully labeled candidate trees over the given label ids."""
    labels = sorted(labels)
    if len(labels) > cap:
        raise OracleCapError(
            "%d labels exceeds the oracle cap of %d" % (len(labels), cap))
    for parent, blocks, _ in _shapes(len(labels)):
        yield _materialize(parent, blocks, labels, table)


def _materialize(parent, blocks, labels, table):
    kids = [[] for _ in range(len(parent))]
    root = 0
    for v, p in enumerate(parent):
        if p is None:
            root = v
        else:
            kids[p].append(v)
    node_labels = [{labels[g] for g in blk} for blk in blocks]
    return XTree(table, list(parent), kids, node_labels, root)


def brute_force_agreement(profile, cap=DEFAULT_CAP):
    """First candidate (in enumeration order) that agrees with every input
    tree, or None when none does.

    The profile must be fully and singly labeled: only then does skipping
    unlabeled candidate nodes lose no agreement trees (an unlabeled node of
    an agreement tree can be contracted into a child, because at most one
    child subtree meets any one input's labels).  Candidate clusters are
    intersected with each input's label set and compared with that input's
    clusters: the definition of agreement, independent of the constructive
    algorithm and of restriction surgery.
    """
    require_normalized(profile)
    universe = sorted(profile.label_universe)
    m = len(universe)
    if m > cap:
        raise OracleCapError(
            "%d labels exceeds the oracle cap of %d" % (m, cap))
    to_generic = {l: g for g, l in enumerate(universe)}
    want = []
    for t, labs in zip(profile.trees, profile.per_tree_label_sets):
        gen_set = frozenset(to_generic[l] for l in labs)
        gen_clusters = frozenset(
            frozenset(to_generic[l] for l in w) for w in t.clusters())
        want.append((gen_set, gen_clusters))
    for parent, blocks, clusters in _shapes(m):
        ok = True
        for gen_set, gen_clusters in want:
            got = set()
            for w in clusters:
                inter = w & gen_set
                if inter:
                    got.add(inter)
            if got != gen_clusters:
                ok = False
                break
        if ok:
            return _materialize(parent, blocks, universe, profile.table)
    return None


def oracle_decide(profile, cap=DEFAULT_CAP):
    """Exhaustive decision for a raw profile: normalize, then search.

    Returns (agrees, tree_or_None); the tree, when any, is an agreement
    tree of the normalized profile (and therefore of the original).  The
    cap is checked against the normalized label universe, which is the
    actual search-space size.
    """
    normalized, _ = normalize_profile(profile)
    tree = brute_force_agreement(normalized, cap=cap)
    return tree is not None, tree
