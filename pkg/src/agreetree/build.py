"""Breadth-first construction of an agreement supertree, or a disagreement
verdict.

Positions are processed from a FIFO queue, starting at the tree roots.
Each position asks for its maximal good decomposition: if no label can be
placed at the root of its subtree (empty root-label set), no agreement
tree exists and the failing position is reported; otherwise a node
carrying those labels is created and the successor positions are queued
under it.  Output nodes may carry several labels.
"""

from collections import deque
from dataclasses import dataclass, field

from agreetree.decompose import (ExposureState, children_sparse,
                                 compute_successor, initial_position)
from agreetree.displaygraph import DisplayGraph
from agreetree.errors import InvalidProfileError
from agreetree.profile import Profile, normalize_profile, require_normalized
from agreetree.xtree import XTree


@dataclass
class BuildStats:
    outer_iters: int = 0
    while_iters_total: int = 0
    max_while_iters: int = 0
    edges_deleted: int = 0
    vertices_deleted: int = 0
    label_universe: int = 0
    trees: int = 0

    def record_while(self, n):
        self.while_iters_total += n
        if n > self.max_while_iters:
            self.max_while_iters = n


@dataclass
class Disagreement:
    """Evidence at the first position whose decomposition has no root
    labels: the position, its frontier children per tree, and the final
    (fully merged) partition blocks."""
    position: tuple
    children: dict
    blocks: list


@dataclass
class BuildOutcome:
    tree: XTree | None
    disagreement: Disagreement | None
    stats: BuildStats

    @property
    def agrees(self):
        return self.tree is not None


def build_agreement_tree(profile, backend="rescan", stats=None,
                         position_hook=None):
    """Run the construction on a fully/singly labeled profile.

    position_hook, when given, is called with (position, decomposition)
    for every processed position; used for verification harnesses.
    """
    require_normalized(profile)
    if stats is None:
        stats = BuildStats()
    stats.label_universe = len(profile.label_universe)
    stats.trees = len(profile.trees)

    graph = DisplayGraph.from_profile(profile, backend=backend)
    exposure = ExposureState(profile)
    pi0 = initial_position(profile)
    for i, l in enumerate(pi0):
        exposure.mark(l, i)

    node_labels = []
    node_parent = []
    queue = deque([(pi0, None)])
    while queue:
        pi, pred = queue.popleft()
        stats.outer_iters += 1
        dec = compute_successor(profile, pi, graph, exposure, stats)
        if position_hook is not None:
            position_hook(pi, dec)
        if not dec.root_labels:
            stats.edges_deleted = graph.edges_deleted
            stats.vertices_deleted = graph.vertices_deleted
            return BuildOutcome(
                None,
                Disagreement(pi, children_sparse(profile, pi), dec.blocks),
                stats)
        node = len(node_labels)
        node_labels.append(set(dec.root_labels))
        node_parent.append(pred)
        for sp in dec.positions:
            queue.append((sp, node))

    stats.edges_deleted = graph.edges_deleted
    stats.vertices_deleted = graph.vertices_deleted
    children = [[] for _ in node_labels]
    for v, p in enumerate(node_parent):
        if p is not None:
            children[p].append(v)
    tree = XTree(profile.table, node_parent, children, node_labels, 0)
    return BuildOutcome(tree, None, stats)


def strip_synthetic(outcome, table):
    """Drop synthetic labels from an agreement tree.

    Nodes left unlabeled are pruned or spliced exactly as in restriction
    surgery; the result is the tree restricted to the original labels.  An
    unlabeled root with two or more children is kept (the semi-labeled
    rule allows it).
    """
    if not outcome.agrees:
        return outcome
    tree = outcome.tree
    keep = [l for l in tree.label_set() if not table.is_synthetic(l)]
    stripped = tree.restrict(keep)
    return BuildOutcome(stripped, None, outcome.stats)


def decide_agreement(profile, backend="rescan", keep_synthetic=False,
                     stats=None):
    """Full pipeline over a raw profile: normalize, build, strip.

    The decision and (on agreement) the returned supertree apply to the
    original profile: filling unlabeled nodes with fresh labels never
    changes the answer, and dropping them from the result keeps it an
    agreement tree for the original trees.
    """
    normalized, synth = normalize_profile(profile)
    outcome = build_agreement_tree(normalized, backend=backend, stats=stats)
    if outcome.agrees and synth and not keep_synthetic:
        outcome = strip_synthetic(outcome, profile.table)
    return outcome
