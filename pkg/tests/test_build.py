"""End-to-end construction: examples, soundness, oracle-matching, strip."""

import random
import warnings

import pytest

from agreetree.build import (build_agreement_tree, decide_agreement,
                             strip_synthetic)
from agreetree.errors import InvalidProfileError
from agreetree.generate import GeneratorConfig, generate_instance
from agreetree.newick import serialize_newick
from agreetree.oracle import oracle_decide
from agreetree.profile import normalize_profile, trees_agree_on
from agreetree.verify import verify_by_clusters, verify_by_embedding
from conftest import make_profile


def test_agreeing_pair():
    p = make_profile(["(a,b)r;", "(a,c)r;"])
    out = decide_agreement(p)
    assert out.agrees
    assert serialize_newick(out.tree) == "(a,b,c)r;"


def test_refinement_disagrees():
    p = make_profile(["(a,b)r;", "((a,b)c)r;"])
    out = decide_agreement(p)
    assert not out.agrees
    tb = p.table
    assert out.disagreement.position == (tb.id_of("r"), tb.id_of("r"))
    assert len(out.disagreement.blocks) == 1


def test_hard_polytomy_disagrees():
    p = make_profile(["(a,b,c)f;", "((a,b)g,c)r;"])
    assert not decide_agreement(p).agrees
    agrees, _ = oracle_decide(p)
    assert not agrees


def test_requires_normalized():
    p = make_profile(["(a,b);"])
    with pytest.raises(InvalidProfileError):
        build_agreement_tree(p)
    assert decide_agreement(p).agrees     # the pipeline normalizes


def test_multilabel_root_output():
    p = make_profile(["(a,b)r;", "(a,b)s;"])
    out = decide_agreement(p)
    assert out.agrees
    assert serialize_newick(out.tree) == "(a,b)r+s;"


def test_strip_identity_without_synthetics():
    p = make_profile(["(a,b)r;", "(a,c)r;"])
    norm, _ = normalize_profile(p)
    out = build_agreement_tree(norm)
    stripped = strip_synthetic(out, p.table)
    assert serialize_newick(stripped.tree) == serialize_newick(out.tree)


def test_strip_unlabeled_root_kept():
    p = make_profile(["(a,b);"])
    out = decide_agreement(p)
    assert out.agrees
    assert serialize_newick(out.tree) == "(a,b);"
    for t in p.trees:
        assert trees_agree_on(out.tree, t)


def test_strip_internal_synthetic_node_kept():
    p = make_profile(["((a,b),c)r;", "(a,d)q;"])
    out = decide_agreement(p)
    assert out.agrees
    assert "_s" not in serialize_newick(out.tree)
    for t in p.trees:
        assert trees_agree_on(out.tree, t)


def test_keep_synthetic_flag():
    p = make_profile(["(a,b);"])
    out = decide_agreement(p, keep_synthetic=True)
    assert serialize_newick(out.tree) == "(a,b)_s0;"


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_deep_chain_profile(backend):
    # unary chains exercise carried entries whose trees bottom out early
    p = make_profile(["(l,z)p;", "(((y)l)m)q;"])
    out = decide_agreement(p, backend=backend)
    assert out.agrees
    norm, _ = normalize_profile(p)
    full = build_agreement_tree(norm, backend=backend)
    assert verify_by_clusters(norm, full.tree)
    assert verify_by_embedding(norm, full.tree)


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_disconnected_display_graph(backend):
    p = make_profile(["(a,b)r;", "(c,d)s;"])
    out = decide_agreement(p, backend=backend)
    assert out.agrees
    assert serialize_newick(out.tree) == "(a,b,c,d)r+s;"


def test_agreeing_generator_always_agrees():
    for seed in range(25):
        rng = random.Random(seed)
        cfg = GeneratorConfig(taxa=rng.randint(1, 20),
                              trees=rng.randint(1, 5), seed=seed,
                              coverage=rng.choice([0.5, 0.8, 1.0]))
        profile, _ = generate_instance(cfg)
        assert decide_agreement(profile).agrees


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_matches_oracle_random_batch(backend):
    mismatches = 0
    checked = 0
    seed = 0
    while checked < 120:
        seed += 1
        rng = random.Random(seed * 31 + (backend == "hdt"))
        cfg = GeneratorConfig(
            taxa=rng.randint(1, 5), trees=rng.randint(1, 3), seed=seed,
            coverage=rng.choice([0.7, 1.0]), mode="perturbed",
            edits=rng.randint(0, 3))
        profile, _ = generate_instance(cfg)
        norm, _ = normalize_profile(profile)
        if len(norm.label_universe) > 5:
            continue
        checked += 1
        got = decide_agreement(profile, backend=backend).agrees
        want, _ = oracle_decide(profile)
        mismatches += got != want
    assert mismatches == 0


def test_soundness_and_bounds_random_batch():
    for seed in range(60):
        rng = random.Random(1234 + seed)
        edits = rng.randint(0, 4)
        cfg = GeneratorConfig(
            taxa=rng.randint(2, 25), trees=rng.randint(1, 6), seed=seed,
            coverage=rng.choice([0.4, 0.7, 1.0]),
            mode="perturbed" if edits else "agreeing", edits=edits)
        profile, _ = generate_instance(cfg)
        norm, _ = normalize_profile(profile)
        out = build_agreement_tree(norm, backend=rng.choice(["rescan", "hdt"]))
        assert out.stats.outer_iters <= len(norm.label_universe)
        assert out.stats.max_while_iters <= len(norm.trees)
        if out.agrees:
            assert verify_by_clusters(norm, out.tree)
            assert verify_by_embedding(norm, out.tree)
            # every node of the raw output is labeled
            assert all(out.tree.labels[v] for v in range(len(out.tree)))
            assert len(out.tree) <= len(norm.label_universe)
