"""Profiles: collections of semi-labeled trees over overlapping label sets.

Provides validation (fully and singly labeled), normalization (fill every
unlabeled node with a fresh synthetic label; the agreement question is
unchanged and any supertree of the normalized profile works for the
original), and the agreement check of one tree against another.
"""

from agreetree.errors import (InvalidProfileError, LabelNotCoveredError,
                              MultiLabeledInputError)
from agreetree.xtree import XTree, restriction_clusters


class Profile:
    """Ordered list of XTrees sharing one LabelTable."""

    def __init__(self, trees, table):
        if not trees:
            raise InvalidProfileError("profile needs at least one tree")
        self.trees = list(trees)
        self.table = table
        self.per_tree_label_sets = [t.label_set() for t in self.trees]
        universe = set()
        for s in self.per_tree_label_sets:
            universe |= s
        self.label_universe = frozenset(universe)
        self.trees_containing = {l: [] for l in universe}
        for i, s in enumerate(self.per_tree_label_sets):
            for l in s:
                self.trees_containing[l].append(i)

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def k(self):
        return len(self.trees)


def validate_profile(profile):
    """Violations of the fully-and-singly-labeled requirement.

    Returns a list of (tree_index, node_index, problem) tuples; empty when
    every node of every tree carries exactly one label.
    """
    out = []
    for i, t in enumerate(profile.trees):
        for v in range(len(t)):
            if not t.labels[v]:
                out.append((i, v, "unlabeled"))
            elif len(t.labels[v]) > 1:
                out.append((i, v, "multi-labeled"))
    return out


def normalize_profile(profile):
    """Fill unlabeled nodes with fresh synthetic labels, preorder per tree.

    Returns (new_profile, synthetic_ids).  Multi-labeled input nodes are
    rejected: inputs must be singly labeled (outputs need not be).
    Idempotent, and original labels are untouched.
    """
    table = profile.table
    for i, t in enumerate(profile.trees):
        for v in range(len(t)):
            if len(t.labels[v]) > 1:
                raise MultiLabeledInputError(
                    "tree %d node %d carries %d labels"
                    % (i, v, len(t.labels[v])))
    new_trees = []
    added = set()
    for t in profile.trees:
        if t.is_fully_labeled():
            new_trees.append(t)
            continue
        labs = [set(s) for s in t.labels]
        for v in t.preorder():
            if not labs[v]:
                lid = table.fresh_synthetic()
                labs[v].add(lid)
                added.add(lid)
        new_trees.append(t.relabeled_copy(labs))
    if not added:
        return profile, frozenset()
    return Profile(new_trees, table), frozenset(added)


def require_normalized(profile):
    bad = validate_profile(profile)
    if bad:
        i, v, what = bad[0]
        raise InvalidProfileError(
            "profile not fully/singly labeled: tree %d node %d is %s"
            % (i, v, what))


def trees_agree_on(supertree, input_tree):
    """True iff the supertree restricted to the input's labels has exactly
    the input's clusters."""
    want = input_tree.label_set()
    if not want <= supertree.label_set():
        missing = sorted(want - supertree.label_set())
        raise LabelNotCoveredError(
            "candidate is missing %d label(s), e.g. %r"
            % (len(missing), supertree.table.name_of(missing[0])))
    return supertree.restrict(want).clusters() == input_tree.clusters()


def restrict_profile(profile, keep):
    """Profile restriction: each tree restricted to keep & its labels;
    trees with empty overlap are dropped."""
    keep = frozenset(keep)
    kept = []
    for t, s in zip(profile.trees, profile.per_tree_label_sets):
        if keep & s:
            kept.append(t.restrict(keep & s))
    return Profile(kept, profile.table)
