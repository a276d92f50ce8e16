"""Display graph structure, split events, and backend-vs-BFS fuzzing."""

import random
from collections import deque

import pytest

from agreetree.displaygraph import DisplayGraph
from agreetree.errors import AlreadyDeletedError, DeadVertexError
from agreetree.hdt import HdtConnectivity
from conftest import make_profile


def bfs_components(adj, alive):
    comps, seen = set(), set()
    for s in alive:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    q.append(y)
        comps.add(frozenset(comp))
    return comps


def graph_edges(profile):
    g = DisplayGraph.from_profile(profile)
    return {frozenset((a, b)) for a in g.adj for b in g.adj[a]}


def nm(profile, pairs):
    tb = profile.table
    return {frozenset(tb.name_of(x) for x in e) for e in pairs}


def test_build_single_tree():
    p = make_profile(["(a,b)r;"])
    assert nm(p, graph_edges(p)) == {frozenset("ra"), frozenset("rb")}


def test_build_dedupes_shared_edges():
    p = make_profile(["(a,b)r;", "(a,c)r;"])
    assert nm(p, graph_edges(p)) == {
        frozenset("ra"), frozenset("rb"), frozenset("rc")}
    p2 = make_profile(["(a,b)r;", "((a,b)c)r;"])
    assert nm(p2, graph_edges(p2)) == {
        frozenset("ra"), frozenset("rb"), frozenset("rc"),
        frozenset("ca"), frozenset("cb")}


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_delete_label_splits(backend):
    p = make_profile(["(a,b)r;"])
    tb = p.table
    g = DisplayGraph.from_profile(p, backend=backend)
    events = g.delete_label(tb.id_of("r"))
    assert len(events) == 2
    comps = {frozenset(m) for m in g.components().values()}
    assert comps == {frozenset({tb.id_of("a")}), frozenset({tb.id_of("b")})}
    assert not g.same_component(tb.id_of("a"), tb.id_of("b"))
    assert g.same_component(tb.id_of("a"), tb.id_of("a"))


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_delete_label_stays_connected(backend):
    p = make_profile(["(a,b)r;", "((a,b)c)r;"])
    tb = p.table
    g = DisplayGraph.from_profile(p, backend=backend)
    g.delete_label(tb.id_of("r"))
    comps = {frozenset(m) for m in g.components().values()}
    assert comps == {frozenset({tb.id_of(x) for x in "abc"})}
    assert g.same_component(tb.id_of("a"), tb.id_of("c"))


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_leaf_deletion_single_event(backend):
    g = DisplayGraph([0, 1], [(0, 1)], backend=backend)
    events = g.delete_label(0)
    assert len(events) == 1
    # tie between the two singleton sides goes to the surviving neighbor
    assert events[0].smaller_members == (1,)


def test_dead_vertex_errors():
    g = DisplayGraph([0, 1], [(0, 1)])
    g.delete_label(0)
    with pytest.raises(AlreadyDeletedError):
        g.delete_label(0)
    with pytest.raises(DeadVertexError):
        g.component_of(0)
    with pytest.raises(DeadVertexError):
        g.same_component(0, 1)


def random_graph(rng, max_n=40):
    n = rng.randint(2, max_n)
    verts = list(range(n))
    edges = set()
    for _ in range(rng.randint(n - 1, 3 * n)):
        u, v = rng.sample(verts, 2)
        edges.add((min(u, v), max(u, v)))
    return verts, edges


@pytest.mark.parametrize("backend", ["rescan", "hdt"])
def test_fuzz_vs_bfs(backend):
    rng = random.Random(99 if backend == "hdt" else 17)
    for trial in range(40):
        verts, edges = random_graph(rng)
        g = DisplayGraph(verts, edges, backend=backend)
        adj = {v: set() for v in verts}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        order = verts[:]
        rng.shuffle(order)
        for l in order:
            pre_sizes = dict(g.comp_size)
            events = g.delete_label(l)
            for e in events:
                assert 2 * len(e.smaller_members) <= pre_sizes[e.old_component]
                pre_sizes[e.old_component] -= len(e.smaller_members)
                pre_sizes[e.new_component] = len(e.smaller_members)
            for y in adj[l]:
                adj[y].discard(l)
            adj[l].clear()
            got = {frozenset(m) for m in g.components().values()}
            assert got == bfs_components(adj, g.alive)


def test_each_edge_deleted_once_bound():
    p = make_profile(["(a,b)r;", "((a,b)c)r;", "(b,c)r;"])
    g = DisplayGraph.from_profile(p)
    total = g.n_edges
    for l in sorted(g.alive):
        g.delete_label(l)
    assert g.edges_deleted == total


def test_hdt_standalone_connectivity():
    rng = random.Random(3)
    verts, edges = random_graph(rng, max_n=60)
    adj = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    h = HdtConnectivity(verts, adj)
    order = sorted(edges)
    rng.shuffle(order)
    for u, v in order:
        h.delete_edge(u, v)
        adj[u].discard(v)
        adj[v].discard(u)
        want = bfs_components(adj, verts)
        for comp in want:
            comp = sorted(comp)
            for x in comp[1:]:
                assert h.connected(comp[0], x)
        # spot-check separation between different components
        comps = sorted([sorted(c) for c in want])
        for i in range(len(comps) - 1):
            assert not h.connected(comps[i][0], comps[i + 1][0])
