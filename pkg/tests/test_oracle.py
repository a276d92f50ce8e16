"""Candidate enumeration counts and the exhaustive decision."""

from math import comb

import pytest

from agreetree.errors import OracleCapError
from agreetree.labels import LabelTable
from agreetree.oracle import (brute_force_agreement, count_candidates,
                              enumerate_candidates, oracle_decide,
                              rooted_trees, set_partitions)
from agreetree.profile import normalize_profile
from agreetree.verify import verify_by_clusters
from conftest import make_profile

# Independent counting recursion (structurally different from the
# enumerator): pick the root's label set, then group the remaining labels
# into subtrees.  g(m) counts forests on m distinguishable labels.


def _count_by_root_choice(n, _f={}, _g={}):
    def g(m):
        if m <= 0:
            return 1
        if m not in _g:
            _g[m] = sum(comb(m - 1, s - 1) * f(s) * g(m - s)
                        for s in range(1, m + 1))
        return _g[m]

    def f(m):
        if m not in _f:
            _f[m] = sum(comb(m, r) * g(m - r) for r in range(1, m + 1))
        return _f[m]

    return f(n)


def test_count_two_labels_is_three():
    assert count_candidates(2) == 3


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_counts_match_independent_recursion(m):
    assert count_candidates(m) == _count_by_root_choice(m)


def test_rooted_tree_count():
    # b^(b-1) rooted labeled trees on b nodes
    for b in (1, 2, 3, 4):
        assert sum(1 for _ in rooted_trees(b)) == b ** (b - 1)


def test_set_partition_count():
    bells = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}
    for n, bell in bells.items():
        assert sum(1 for _ in set_partitions(range(n))) == bell


def test_enumerate_unique_and_fully_labeled():
    tb = LabelTable()
    ids = [tb.intern(x) for x in "abc"]
    seen = set()
    for t in enumerate_candidates(ids, tb):
        assert t.is_fully_labeled()
        assert t.label_set() == frozenset(ids)
        key = t.clusters()
        assert key not in seen      # clusters determine the tree
        seen.add(key)
    assert len(seen) == 16


def test_cap_enforced():
    tb = LabelTable()
    ids = [tb.intern("x%d" % i) for i in range(7)]
    with pytest.raises(OracleCapError):
        list(enumerate_candidates(ids, tb))
    p = make_profile(["(a,b,c,d,e,f,g)r;"])
    with pytest.raises(OracleCapError):
        oracle_decide(p)


def test_decisions_and_found_tree_verifies():
    p = make_profile(["(a,b)r;", "(a,c)r;"])
    norm, _ = normalize_profile(p)
    t = brute_force_agreement(norm)
    assert t is not None
    assert verify_by_clusters(norm, t)
    p2 = make_profile(["(a,b)r;", "((a,b)c)r;"])
    norm2, _ = normalize_profile(p2)
    assert brute_force_agreement(norm2) is None


def test_single_tree_profile_found():
    p = make_profile(["((a,b)x,c)r;"])
    norm, _ = normalize_profile(p)
    t = brute_force_agreement(norm)
    assert t.clusters() == norm.trees[0].clusters()


def test_unlabeled_root_needs_normalization():
    # over the raw two-label universe no fully labeled candidate works,
    # but the profile trivially agrees with itself once normalized
    p = make_profile(["(a,b);"])
    agrees, tree = oracle_decide(p)
    assert agrees
    norm, _ = normalize_profile(p)
    assert verify_by_clusters(norm, tree)
