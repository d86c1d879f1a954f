import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_max_cliques_sizes
from omsep import construct
from omsep.construct import alternating, figure_matroid
from omsep.core import SignedSet, popcount
from omsep.errors import ResourceLimit
from omsep.separation import collection_of, is_collection_separated, is_pair_separated
from omsep.tilings import (bad_collection_certificate, count_colocalizations, domain_purity_check,
                           domain_restriction_conjecture_check, enumerate_colocalizations, flip_graph,
                           flip_relation_holds, is_flip_connected, max_by_size_collections, maximal_cliques,
                           mutation_graph, purity_check, separation_adjacency, tiling_of, verify_tiling)


@pytest.mark.parametrize("n, count", [(3, 2), (4, 8), (5, 62), (6, 908)])
def test_rank2_counts_match_rhombus_tilings(n, count):
    assert count_colocalizations(alternating(n, 2)) == count


def test_enumeration_is_deterministic_and_respects_limit():
    m = alternating(5, 3)
    first = list(enumerate_colocalizations(m))
    assert first == list(enumerate_colocalizations(m))
    assert list(enumerate_colocalizations(m, limit=3)) == first[:3]
    with pytest.raises(ResourceLimit):
        count_colocalizations(alternating(6, 2), cap=100)


@pytest.mark.parametrize("nd", [(5, 2), (6, 2), (6, 3)])
def test_colocalizations_biject_with_full_cliques(nd):
    m = alternating(*nd)
    ind = m.tutte_eval(2, 1)
    adj = separation_adjacency(m)
    full = {c for c in maximal_cliques(adj, (1 << (1 << m.n)) - 1) if popcount(c) == ind}
    from_sigma = {sum(1 << s for s in collection_of(m, sig)) for sig in enumerate_colocalizations(m)}
    assert full == from_sigma


def test_separation_adjacency_matches_pairs():
    m = alternating(5, 3)
    adj = separation_adjacency(m)
    for i in range(32):
        for j in range(32):
            assert bool(adj[i] >> j & 1) == (i != j and is_pair_separated(m, i, j))


@st.composite
def bit_graphs(draw):
    n = draw(st.integers(1, 12))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    adj = [0] * n
    for u, v in edges:
        if u != v:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return n, adj


@settings(max_examples=150, deadline=None)
@given(bit_graphs())
def test_maximal_cliques_match_networkx(g):
    n, adj = g
    ours = sorted(maximal_cliques(adj, (1 << n) - 1))
    ref = nx.Graph()
    ref.add_nodes_from(range(n))
    ref.add_edges_from((u, v) for u in range(n) for v in range(n) if adj[u] >> v & 1)
    theirs = sorted(sum(1 << v for v in c) for c in nx.find_cliques(ref))
    assert ours == theirs


@pytest.mark.parametrize("nd", [(3, 1), (3, 2), (4, 2), (4, 3)])
def test_purity_against_brute_force(nd):
    m = alternating(*nd)
    res = purity_check(m, exhaustive=True)
    sizes = brute_max_cliques_sizes(m)
    assert res.pure == (sizes == {m.tutte_eval(2, 1)})
    assert (res.min_size, res.max_size) == (min(sizes), max(sizes))


def test_impurity_witness_is_separated_and_maximal():
    m = alternating(6, 4)
    res = purity_check(m)
    assert not res.pure
    w = res.witness
    assert is_collection_separated(m, w)
    assert len(w) < res.ind
    for s in range(1 << m.n):
        if s not in w:
            assert not all(is_pair_separated(m, s, t) for t in w)


def test_purity_guard():
    with pytest.raises(ResourceLimit):
        purity_check(alternating(13, 2))


@pytest.mark.parametrize("nd", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_tilings_pass_every_tile_property(nd):
    m = alternating(*nd)
    for sets in max_by_size_collections(m, limit=40):
        rep = verify_tiling(m, sets)
        assert rep.ok, {k: v for k, v in rep.checks.items() if not v["pass"]}


def test_tiles_of_a_cube():
    tiles = tiling_of(2, [0, 1, 2, 3])
    assert len(tiles) == 9  # 4 vertices, 4 edges, 1 square


@pytest.mark.parametrize("nd", [(4, 2), (5, 2), (5, 3), (6, 4)])
def test_flip_graph(nd):
    m = alternating(*nd)
    g = flip_graph(m)
    for u, vs in g.items():
        for v in vs:
            assert u in g[v]
            i = next(k for k in range(len(u)) if u[k] != v[k])
            assert sum(1 for a, b in zip(u, v) if a != b) == 1
            assert flip_relation_holds(m, u, i)
    assert is_flip_connected(m)


@pytest.mark.parametrize("nd", [(4, 2), (5, 3)])
def test_mutation_graph_is_symmetric(nd):
    m = alternating(*nd)
    mg = mutation_graph(m)
    for s, vs in mg.adj.items():
        for t in vs:
            assert s in mg.adj[t]
            assert mg.component[s] == mg.component[t]
    assert sum(mg.sizes()) == 1 << m.n


@pytest.mark.parametrize("name", sorted(construct.NON_POSITROID_FIGURES))
def test_figure_certificates(name):
    fig = construct.NON_POSITROID_FIGURES[name]
    m = figure_matroid(name)
    plus, minus = fig["circuit"]
    c = SignedSet(m.mask(plus), m.mask(minus))
    assert c in set(m.all_circuits)
    cert = bad_collection_certificate(m, c, [m.mask(s) for s in fig["collection"]])
    assert cert.valid and cert.separated and not cert.unblocked
    assert not purity_check(m).pure


def test_certificate_detects_unblocked_sets():
    m = figure_matroid("IC(6,3,13)")
    c = SignedSet(m.mask("6"), m.mask("124"))
    cert = bad_collection_certificate(m, c, [m.mask("456")])
    assert not cert.valid and cert.unblocked


def test_domain_purity_on_full_domain_agrees():
    m = alternating(5, 2)
    res = domain_purity_check(m, range(32))
    assert res.pure and res.max_size == m.tutte_eval(2, 1)


@pytest.mark.parametrize("nd", [(4, 2), (5, 2)])
def test_domain_restriction_check_runs(nd):
    rep = domain_restriction_conjecture_check(alternating(*nd))
    detail = rep.checks["confirmed"]["detail"]
    assert detail["collections"] > 0
    assert rep.ok == (not detail["counterexamples"])
