import random
from itertools import combinations
from math import comb

import pytest

from blades.combinatorics import GroundSet, is_frozen
from blades.enumeration import (
    ALL,
    TWO_INTERVAL,
    EnumerationError,
    TimeBudgetExceeded,
    build_graph,
    catalan,
    count_maximal_collections,
    cross_validate_theorem,
    enumerate_collections,
    iter_maximal_cliques,
    maximal_collections,
    verify_purity,
    ws_pair_count,
)
from oracles import brute_intervals, brute_ws

TABLE_1 = {
    (2, 4): 2, (2, 5): 5, (3, 5): 5, (2, 6): 14, (3, 6): 34, (4, 6): 14,
    (2, 7): 42, (3, 7): 259, (4, 7): 259, (5, 7): 42,
    (2, 8): 132, (3, 8): 2136, (4, 8): 5470, (5, 8): 2136, (6, 8): 132,
}
TABLE_2 = {(3, 6): 18, (3, 7): 63, (4, 7): 63, (3, 8): 216, (4, 8): 328, (5, 8): 216}


def brute_maximal_count(k, n, two_interval=False):
    """Maximal pairwise-separated families by growing every clique by hand (tiny cases)."""
    g = GroundSet.standard(n)
    nodes = [v.members for v in g.k_subsets(k) if brute_intervals(v.members, g.sigma) > 1]
    ok = {(a, b) for a in nodes for b in nodes if brute_ws(a, b, g.sigma)}
    found = set()

    def grow(family, rest):
        ext = [v for v in rest if all((v, u) in ok for u in family)]
        if not ext:
            found.add(frozenset(family))
            return
        for i, v in enumerate(ext):
            grow(family + [v], ext[i + 1:])

    grow([], nodes)
    maximal = {f for f in found if not any(f < h for h in found)}
    if two_interval:
        maximal = {f for f in maximal if all(brute_intervals(v, g.sigma) == 2 for v in f)}
    return len(maximal)


@pytest.mark.parametrize("kn", sorted(TABLE_1))
def test_table_one(kn):
    res = enumerate_collections(*kn)
    assert res.count == TABLE_1[kn]
    assert res.purity


@pytest.mark.parametrize("kn", sorted(TABLE_2))
def test_table_two(kn):
    assert enumerate_collections(*kn, filter=TWO_INTERVAL).count == TABLE_2[kn]


@pytest.mark.parametrize("kn", [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6)])
def test_counts_match_brute_force(kn):
    assert enumerate_collections(*kn).count == brute_maximal_count(*kn)
    assert enumerate_collections(*kn, filter=TWO_INTERVAL).count == brute_maximal_count(*kn, two_interval=True)


def test_catalan_column():
    for n in range(4, 9):
        assert enumerate_collections(2, n).count == catalan(n - 2)


def test_graph_shape_and_pair_counts():
    g = build_graph(4, 8)
    assert len(g.nodes) == 62 == comb(8, 4) - 8
    assert g.edge_count == 1048 == ws_pair_count(g)
    assert ws_pair_count(g, (2, 4, 6, 8)) == 24
    assert ws_pair_count(build_graph(3, 6), (2, 4, 6)) == 6


@pytest.mark.parametrize("kn", [(2, 6), (3, 6), (3, 7), (4, 8)])
def test_graph_matches_brute_force(kn):
    k, n = kn
    g = build_graph(k, n)
    gs = GroundSet.standard(n)
    for i, j in combinations(range(len(g.nodes)), 2):
        a, b = g.subset(i).members, g.subset(j).members
        assert bool(g.adjacency[i] >> j & 1) == brute_ws(a, b, gs.sigma)
        assert bool(g.adjacency[i] >> j & 1) == bool(g.adjacency[j] >> i & 1)
    assert all(not (g.adjacency[i] >> i & 1) for i in range(len(g.nodes)))


def test_purity():
    assert verify_purity(build_graph(3, 6))
    res = enumerate_collections(2, 5)
    assert res.size_histogram == {2: 5}
    res = enumerate_collections(4, 8)
    assert res.size_histogram == {9: 5470}
    res = enumerate_collections(3, 6, materialize=True)
    assert {len(c) for c in res.collections} == {4}


@pytest.mark.parametrize("kn", [(3, 6), (3, 7), (4, 7)])
def test_symmetry(kn):
    k, n = kn
    assert enumerate_collections(k, n).count == enumerate_collections(n - k, n).count
    assert enumerate_collections(k, n, filter=TWO_INTERVAL).count == \
        enumerate_collections(n - k, n, filter=TWO_INTERVAL).count


def test_parallel_matches_serial():
    g = build_graph(4, 8)
    serial = count_maximal_collections(g, threads=1)
    parallel = count_maximal_collections(g, threads=2)
    assert serial.count == parallel.count == 5470
    assert serial.size_histogram == parallel.size_histogram


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("BLADES_THREADS", "2")
    assert enumerate_collections(3, 7).count == 259
    monkeypatch.setenv("BLADES_THREADS", "junk")
    assert enumerate_collections(3, 6).count == 34


def test_count_does_not_depend_on_node_order():
    sigma = (1, 2, 3, 4, 5, 6, 7)
    base = build_graph(3, 7, sigma=sigma)
    rng = random.Random(0)
    perm = list(range(len(base.nodes)))
    rng.shuffle(perm)
    inv = {old: new for new, old in enumerate(perm)}
    adj = [0] * len(perm)
    for new, old in enumerate(perm):
        row = base.adjacency[old]
        for j in range(len(perm)):
            if row >> j & 1:
                adj[new] |= 1 << inv[j]
    shuffled = type(base)(3, 7, ALL, base.ground, [base.nodes[o] for o in perm], adj)
    assert shuffled.edge_count == base.edge_count
    assert count_maximal_collections(shuffled).count == 259


def test_streaming_and_materialized_collections_agree():
    g = build_graph(3, 6)
    streamed = []
    res = count_maximal_collections(g, materialize=True, on_clique=streamed.append)
    assert sorted(streamed) == sorted(res.collections) == sorted(iter_maximal_cliques(g))
    cols = maximal_collections(3, 6)
    assert len(cols) == 34 and all(len(c) == 4 for c in cols)


def test_two_interval_collections_only_use_two_interval_subsets():
    g = GroundSet.standard(7)
    for c in maximal_collections(3, 7, TWO_INTERVAL):
        assert all(brute_intervals(v.members, g.sigma) == 2 for v in c)


def test_time_budget():
    with pytest.raises(TimeBudgetExceeded):
        enumerate_collections(4, 9, time_budget=1e-4)


def test_parameter_validation():
    with pytest.raises(EnumerationError):
        build_graph(1, 5)
    with pytest.raises(EnumerationError):
        build_graph(3, 4)
    with pytest.raises(EnumerationError):
        build_graph(2, 5, "weird")
    with pytest.raises(EnumerationError):
        build_graph(2, 5, sigma=(1, 2, 3))


def test_enumeration_result_json():
    out = enumerate_collections(3, 6).to_json()
    assert out["maximal_count"] == 34 and out["purity"] is True
    assert set(out) == {"k", "n", "filter", "maximal_count", "purity", "elapsed_ms"}


def test_cross_validation_small():
    rep = cross_validate_theorem(3, 6, sizes=(2,))
    assert rep.checked == comb(14, 2) == 91
    assert rep.ok
    rep = cross_validate_theorem(3, 7, collections=[[(1, 2, 4), (1, 3, 5)]])
    assert rep.ok and rep.ws_true == 0


def test_cross_validation_random_sample():
    rep = cross_validate_theorem(3, 7, sample_size=40, seed=4)
    assert rep.checked == 80 and rep.ok
    assert 0 < rep.ws_true < rep.checked


def test_frozen_excluded():
    g = build_graph(3, 7)
    assert all(not is_frozen(g.subset(i)) for i in range(len(g.nodes)))
