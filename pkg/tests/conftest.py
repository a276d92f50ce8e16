"""Shared helpers: tiny profile builders and a standalone successor harness."""

import pytest

from agreetree.decompose import (ExposureState, child_union,
                                 compute_successor, exposed_labels,
                                 is_good_partition, position_label_set)
from agreetree.displaygraph import DisplayGraph
from agreetree.newick import parse_profile_text
from agreetree.oracle import set_partitions
from agreetree.profile import Profile


def make_profile(lines):
    trees, table = parse_profile_text("\n".join(lines))
    return Profile(trees, table)


def names(table, ids):
    return {table.name_of(i) for i in ids}


def named_position(table, pi):
    return tuple(None if l is None else table.name_of(l) for l in pi)


def pos_of(profile, *entry_names):
    """Position from label names; '' or None marks an empty entry."""
    tb = profile.table
    return tuple(None if not n else tb.id_of(n) for n in entry_names)


def standalone_successor(profile, pi, backend="rescan"):
    """Run the successor computation on one position in isolation.

    Sets up the display graph as a full run would see it: labels outside
    the position's reach are treated as consumed and deleted up front; the
    position's own exposed labels are all new.
    """
    graph = DisplayGraph.from_profile(profile, backend=backend)
    keep = position_label_set(profile, pi)
    for l in sorted(profile.label_universe - keep):
        if graph.is_alive(l):
            graph.delete_label(l)
    exposure = ExposureState.from_position(profile, pi)
    return compute_successor(profile, pi, graph, exposure)


def all_good_partitions(profile, pi, max_children_count=7):
    """Exhaustive (S, blocks) search over a position's frontier children.

    Returns None when the ground set is larger than max_children_count,
    else every good partition as (frozenset, frozenset-of-frozensets).
    """
    ground = sorted(child_union(profile, pi))
    if len(ground) > max_children_count:
        return None
    exposed = sorted(exposed_labels(profile, pi))
    subsets = [[]]
    for l in exposed:
        subsets += [s + [l] for s in subsets]
    found = []
    for blocks in set_partitions(ground):
        fblocks = [frozenset(b) for b in blocks]
        for s in subsets:
            if is_good_partition(profile, pi, set(s), fblocks):
                found.append((frozenset(s), frozenset(fblocks)))
    return found


@pytest.fixture
def two_tree_profile():
    return make_profile(["(a,b)r;", "(a,c)r;"])


@pytest.fixture
def refinement_conflict_profile():
    return make_profile(["(a,b)r;", "((a,b)c)r;"])
