"""Positions, exposure, good partitions, and the successor computation.

A position marks one frontier label per input tree (or none); it stands
for the subprofile of everything at or below those labels.  Decomposing a
position means choosing root labels S (they must be exposed: every tree
containing such a label points at it) and splitting the remaining label
mass into label-disjoint successor positions, one per block of a "good"
partition of the frontier children.

compute_successor finds the unique finest good partition: it deletes the
newly exposed labels from the display graph, reads off candidate blocks
from the connected components, and then repeatedly demotes "bad" labels
(exposed labels with two children of one tree in a single block), merging
the touched blocks, until none remain.
"""

from dataclasses import dataclass, field

from agreetree.errors import (InvalidPositionError, NicenessViolatedError)

# ---------------------------------------------------------------------------
# positions


def initial_position(profile):
    """One root label per tree (profiles are normalized, so roots are
    labeled)."""
    out = []
    for t in profile.trees:
        labs = t.labels[t.root]
        if len(labs) != 1:
            raise InvalidPositionError("tree root is not singly labeled")
        out.append(next(iter(labs)))
    return tuple(out)


def position_label_set(profile, pi):
    """All labels at or below the position's entries."""
    acc = set()
    for i, l in enumerate(pi):
        if l is not None:
            acc |= profile.trees[i].cluster_of_label(l)
    return acc


def is_valid_position(profile, pi):
    """True iff each tree's share of the position's label set is exactly
    the cluster below its entry."""
    xp = position_label_set(profile, pi)
    for i, l in enumerate(pi):
        part = xp & profile.per_tree_label_sets[i]
        if l is None:
            if part:
                return False
        elif part != profile.trees[i].cluster_of_label(l):
            return False
    return True


def exposed_labels(profile, pi):
    """Labels every containing tree currently points at.

    A position label l is exposed when pi[i] == l for every tree i whose
    share of the position's labels includes l; on valid positions that is
    every tree containing l."""
    entries = {l for l in pi if l is not None}
    out = set()
    for l in entries:
        ok = True
        for i, e in enumerate(pi):
            if e == l:
                continue
            if e is None:
                if l in profile.per_tree_label_sets[i]:
                    # tree i contains l but has no entry: l is outside this
                    # position's share of tree i, so it does not constrain
                    continue
            else:
                if l in profile.trees[i].cluster_of_label(e):
                    ok = False
                    break
        if ok:
            out.add(l)
    return out


def children_sparse(profile, pi):
    """Per-tree frontier children: {i: labels directly below pi[i]},
    nonempty entries only."""
    out = {}
    for i, l in enumerate(pi):
        if l is not None:
            kids = profile.trees[i].children_labels(l)
            if kids:
                out[i] = kids
    return out


def child_union(profile, pi):
    acc = set()
    for kids in children_sparse(profile, pi).values():
        acc.update(kids)
    return acc


class ExposureState:
    """Per-label record of which trees currently point at the label.

    A label is exposed once all trees containing it do.  Maintained
    incrementally across the whole construction; marks persist while the
    carrying frontier entries survive."""

    def __init__(self, profile):
        self.profile = profile
        self.marks = {}

    @classmethod
    def from_position(cls, profile, pi):
        st = cls(profile)
        for i, l in enumerate(pi):
            if l is not None:
                st.mark(l, i)
        return st

    def mark(self, label, tree_index):
        s = self.marks.get(label)
        if s is None:
            s = self.marks[label] = set()
        s.add(tree_index)

    def is_exposed(self, label):
        return len(self.marks.get(label, ())) == \
            len(self.profile.trees_containing[label])

    def clear(self, label):
        self.marks.pop(label, None)


# ---------------------------------------------------------------------------
# good partitions as values (test and verification surface)


def profile_cluster_union(profile, labels):
    """Union of the clusters of the given labels over every containing
    tree: the label mass a child block accounts for."""
    acc = set()
    for a in labels:
        for i in profile.trees_containing.get(a, ()):
            acc |= profile.trees[i].cluster_of_label(a)
    return acc


def successor_position(profile, pi, s, block):
    """The position a child block induces.

    Entries of root labels (in s) step down to their single child inside
    the block; other entries stay put exactly when the block accounts for
    their label (children meet the block, or the label itself lies in the
    block's cluster union), and go empty otherwise.
    """
    block = set(block)
    closure = None
    out = [None] * len(pi)
    for i, l in enumerate(pi):
        if l is None:
            continue
        kids = profile.trees[i].children_labels(l)
        meet = [c for c in kids if c in block]
        if l in s:
            if len(meet) > 1:
                raise NicenessViolatedError(
                    "block takes %d children of an exposed label in one tree"
                    % len(meet))
            if meet:
                out[i] = meet[0]
        else:
            if meet:
                out[i] = l
            else:
                if closure is None:
                    closure = profile_cluster_union(profile, block)
                if l in closure:
                    out[i] = l
    return tuple(out)


def is_nice(profile, pi, s, block):
    """Niceness of a block: each root label contributes at most one child
    per tree, and each non-root position label whose children meet the
    block keeps all its children inside the block's cluster union."""
    block = set(block)
    closure = None
    seen = set()
    for i, l in enumerate(pi):
        if l is None or l in seen:
            continue
        seen.add(l)
        ch_p = set()
        for j in profile.trees_containing[l]:
            ch_p.update(profile.trees[j].children_labels(l))
        if not ch_p & block:
            continue
        if l in s:
            for j, e in enumerate(pi):
                if e == l:
                    inter = sum(1 for c in profile.trees[j].children_labels(l)
                                if c in block)
                    if inter > 1:
                        return False
        else:
            if closure is None:
                closure = profile_cluster_union(profile, block)
            if not ch_p <= closure:
                return False
    return True


def is_good_partition(profile, pi, s, blocks):
    """A partition of the frontier children is good when s contains only
    exposed labels, every block is nice, and the induced successor
    positions are pairwise label-disjoint."""
    blocks = [frozenset(b) for b in blocks]
    ground = child_union(profile, pi)
    if any(not b for b in blocks):
        return False
    union = set()
    total = 0
    for b in blocks:
        union |= b
        total += len(b)
    if union != ground or total != len(ground):
        return False
    exp = exposed_labels(profile, pi)
    if not set(s) <= exp:
        return False
    for b in blocks:
        if not is_nice(profile, pi, s, b):
            return False
    label_sets = []
    for b in blocks:
        try:
            sp = successor_position(profile, pi, s, b)
        except NicenessViolatedError:
            return False
        label_sets.append(position_label_set(profile, sp))
    for a in range(len(label_sets)):
        for b in range(a + 1, len(label_sets)):
            if label_sets[a] & label_sets[b]:
                return False
    return True


def meet_partitions(part_a, part_b):
    """The meet: union of the root-label sets, pairwise intersections of
    the blocks (empty ones dropped)."""
    s_a, blocks_a = part_a
    s_b, blocks_b = part_b
    out = set()
    for x in blocks_a:
        fx = frozenset(x)
        for y in blocks_b:
            inter = fx & frozenset(y)
            if inter:
                out.add(inter)
    return frozenset(s_a) | frozenset(s_b), frozenset(out)


def is_finer(part_a, part_b):
    """part_a refines part_b: more root labels, blocks nested."""
    s_a, blocks_a = part_a
    s_b, blocks_b = part_b
    if not frozenset(s_a) >= frozenset(s_b):
        return False
    big = [frozenset(y) for y in blocks_b]
    for x in blocks_a:
        fx = frozenset(x)
        if not any(fx <= y for y in big):
            return False
    return True


# ---------------------------------------------------------------------------
# successor computation against the display graph


@dataclass
class GoodDecomposition:
    root_labels: frozenset
    positions: list
    blocks: list                      # the partition, as label frozensets
    while_iters: int = 0

    def partition(self):
        return self.root_labels, frozenset(self.blocks)


class _Block:
    __slots__ = ("per_tree", "size", "comps")

    def __init__(self, comp):
        self.per_tree = {}
        self.size = 0
        self.comps = [comp]


def compute_successor(profile, pi, graph, exposure, stats=None):
    """Maximal good decomposition of a valid position.

    The display graph must hold exactly the live region for this position:
    everything at or below the position's entries, minus exposed labels
    already deleted for ancestor positions.  Newly exposed labels are
    deleted here (each vertex and edge of the graph is deleted at most
    once over a whole run).
    """
    entries = [(i, l) for i, l in enumerate(pi) if l is not None]

    s = set()
    k_set = set()
    for i, l in entries:
        if l in s or exposure.is_exposed(l):
            s.add(l)
            k_set.add(i)

    for l in sorted(s):
        if graph.is_alive(l):
            graph.delete_label(l)

    # children grouped by live component
    tree_children = {}
    block_of_comp = {}
    member_block = {}
    blocks = []
    for i, l in entries:
        kids = profile.trees[i].children_labels(l)
        if not kids:
            continue
        tree_children[i] = kids
        for c in kids:
            comp = graph.component_of(c)
            blk = block_of_comp.get(comp)
            if blk is None:
                blk = block_of_comp[comp] = _Block(comp)
                blocks.append(blk)
            lst = blk.per_tree.get(i)
            if lst is None:
                lst = blk.per_tree[i] = []
            lst.append(c)
            blk.size += 1
            member_block[c] = blk

    # demote bad labels, coarsening the partition as forced
    while_iters = 0
    demoted_rep = {}
    while True:
        bad = None
        for i in k_set:
            counts = {}
            for c in tree_children.get(i, ()):
                b = id(member_block[c])
                hits = counts.get(b, 0) + 1
                if hits >= 2:
                    l = pi[i]
                    if bad is None or l < bad:
                        bad = l
                    break
                counts[b] = hits
        if bad is None:
            break
        while_iters += 1
        k_bad = [i for i, l in entries if l == bad]
        touched = []
        seen = set()
        for i in k_bad:
            for c in tree_children.get(i, ()):
                b = member_block[c]
                if id(b) not in seen:
                    seen.add(id(b))
                    touched.append(b)
                if bad not in demoted_rep:
                    demoted_rep[bad] = c
        big = max(touched, key=lambda b: b.size)
        for b in touched:
            if b is big:
                continue
            for i, lst in b.per_tree.items():
                dst = big.per_tree.get(i)
                if dst is None:
                    big.per_tree[i] = lst
                else:
                    dst.extend(lst)
                for c in lst:
                    member_block[c] = big
            for comp in b.comps:
                block_of_comp[comp] = big
            big.comps.extend(b.comps)
            big.size += b.size
            b.size = 0
        blocks = [b for b in blocks if b.size]
        s.discard(bad)
        k_set -= set(k_bad)

    if stats is not None:
        stats.record_while(while_iters)

    # where does each carried (non-root) entry go?  Its label's children
    # all sit in one block; a leaf entry follows the block whose component
    # holds the label itself.
    target = {}
    for i, l in entries:
        if l in s:
            continue
        kids = tree_children.get(i)
        if kids:
            target[i] = member_block[kids[0]]
        elif l in demoted_rep:
            target[i] = member_block[demoted_rep[l]]
        else:
            target[i] = block_of_comp[graph.component_of(l)]

    # successor positions, one per block
    k = len(pi)
    positions = []
    block_labels = []
    for b in blocks:
        pos = [None] * k
        for i, l in entries:
            if l in s:
                members = b.per_tree.get(i)
                if members:
                    if len(members) != 1:
                        raise NicenessViolatedError(
                            "unmerged bad label escaped the demotion loop")
                    c = members[0]
                    pos[i] = c
                    exposure.mark(c, i)
            elif target[i] is b:
                pos[i] = l
        positions.append(tuple(pos))
        acc = set()
        for lst in b.per_tree.values():
            acc.update(lst)
        block_labels.append(frozenset(acc))

    for l in s:
        exposure.clear(l)

    return GoodDecomposition(frozenset(s), positions, block_labels,
                             while_iters)
