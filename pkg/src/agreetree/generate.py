"""Random profile generation for tests and benchmarks.

AGREEING mode draws a random fully labeled master tree and emits its
restrictions to sampled label subsets; the master restricted to the union
of the samples agrees with every emitted tree, so these profiles always
agree.  PERTURBED mode additionally applies random subtree regrafts to
individual trees, which usually (not always) breaks agreement.
"""

import random
from dataclasses import dataclass

from agreetree.errors import BadConfigError
from agreetree.labels import LabelTable
from agreetree.profile import Profile
from agreetree.xtree import XTree

MODE_AGREEING = "agreeing"
MODE_PERTURBED = "perturbed"


@dataclass
class GeneratorConfig:
    taxa: int
    trees: int
    seed: int = 0
    coverage: float = 1.0
    mode: str = MODE_AGREEING
    edits: int = 0
    max_children: int = 4

    def check(self):
        if self.taxa < 1 or self.trees < 1:
            raise BadConfigError("need at least one taxon and one tree")
        if not (0.0 < self.coverage <= 1.0):
            raise BadConfigError("coverage must be in (0, 1]")
        if self.mode not in (MODE_AGREEING, MODE_PERTURBED):
            raise BadConfigError("unknown mode %r" % self.mode)
        if self.edits < 0:
            raise BadConfigError("edits must be >= 0")
        if self.max_children < 2:
            raise BadConfigError("max_children must be >= 2")


def random_master(n, rng, table, max_children=4, prefix="t"):
    """Random fully labeled rooted tree on n fresh labels."""
    ids = [table.intern("%s%d" % (prefix, i)) for i in range(n)]
    parent = [None] * n
    children = [[] for _ in range(n)]
    open_nodes = [0]
    for v in range(1, n):
        p = open_nodes[rng.randrange(len(open_nodes))]
        parent[v] = p
        children[p].append(v)
        if len(children[p]) >= max_children:
            open_nodes.remove(p)
        open_nodes.append(v)
    return XTree(table, parent, children, [{l} for l in ids], 0)


def subtree_regraft(tree, rng):
    """Move one random non-root subtree under another random node.

    Nodes left unlabeled with one child are spliced away afterwards, so
    the result is again a semi-labeled tree over the same labels."""
    n = len(tree)
    if n < 3:
        return tree
    non_root = [x for x in range(n) if tree.parent[x] is not None]
    v = non_root[rng.randrange(len(non_root))]
    inside = set()
    stack = [v]
    while stack:
        x = stack.pop()
        inside.add(x)
        stack.extend(tree.children[x])
    spots = [u for u in range(n) if u not in inside and u != tree.parent[v]]
    if not spots:
        return tree
    u = spots[rng.randrange(len(spots))]
    parent = list(tree.parent)
    children = [list(cs) for cs in tree.children]
    children[parent[v]].remove(v)
    parent[v] = u
    children[u].append(v)
    moved = XTree(tree.table, parent, children,
                  [set(s) for s in tree.labels], tree.root)
    # restriction to the full label set is exactly the cleanup pass
    return moved.restrict(moved.label_set())


def generate_instance(cfg):
    """Build (profile, master) for a config; bit-reproducible per seed."""
    cfg.check()
    rng = random.Random(cfg.seed)
    table = LabelTable()
    master = random_master(cfg.taxa, rng, table, cfg.max_children)
    all_labels = sorted(master.label_set())
    trees = []
    for _ in range(cfg.trees):
        if cfg.coverage >= 1.0:
            sample = list(all_labels)
        else:
            sample = [l for l in all_labels if rng.random() < cfg.coverage]
            if not sample:
                sample = [all_labels[rng.randrange(len(all_labels))]]
        trees.append(master.restrict(sample))
    if cfg.mode == MODE_PERTURBED:
        for _ in range(cfg.edits):
            i = rng.randrange(len(trees))
            trees[i] = subtree_regraft(trees[i], rng)
    return Profile(trees, table), master


def generate_profile(cfg):
    return generate_instance(cfg)[0]


def random_candidate(label_ids, table, rng):
    """Random semi-labeled tree carrying exactly the given labels.

    Labels are thrown onto a random tree skeleton (several may share a
    node); skeleton nodes that end up unlabeled with fewer than two
    children are cleaned away."""
    labels = sorted(label_ids)
    m = len(labels)
    n_nodes = rng.randint(1, m) if m > 1 else 1
    parent = [None] * n_nodes
    children = [[] for _ in range(n_nodes)]
    for v in range(1, n_nodes):
        p = rng.randrange(v)
        parent[v] = p
        children[p].append(v)
    node_labels = [set() for _ in range(n_nodes)]
    for l in labels:
        node_labels[rng.randrange(n_nodes)].add(l)
    rough = XTree(table, parent, children, node_labels, 0)
    return rough.restrict(rough.label_set())
