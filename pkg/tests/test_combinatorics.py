from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blades.combinatorics import (
    GroundSet,
    GroundSetError,
    KSubset,
    WSCollection,
    cyclic_intervals,
    frozen_subsets,
    is_frozen,
    is_weakly_separated,
    is_ws_collection,
    rotate,
)
from oracles import brute_intervals, brute_ws


def sub(n, *members):
    return KSubset(GroundSet.standard(n), members)


@pytest.mark.parametrize(
    "n,a,b,expected",
    [
        (4, (1, 3), (2, 4), False),
        (6, (1, 2, 5), (1, 3, 4), True),
        (7, (1, 2, 4), (1, 3, 5), False),
        (7, (1, 2, 4), (1, 2, 4), True),
    ],
)
def test_weak_separation_examples(n, a, b, expected):
    assert is_weakly_separated(sub(n, *a), sub(n, *b)) is expected


def test_ws_rejects_mismatch():
    with pytest.raises(GroundSetError):
        is_weakly_separated(sub(5, 1, 2), sub(5, 1, 2, 3))
    with pytest.raises(GroundSetError):
        is_weakly_separated(sub(5, 1, 2), sub(6, 1, 2))


def test_ws_collection_examples():
    g = GroundSet.standard(7)
    c = WSCollection.from_lists(g, [(1, 2, 4), (2, 4, 7), (2, 6, 7), (3, 4, 7), (4, 5, 7), (4, 6, 7)])
    assert is_ws_collection(c)
    assert not is_ws_collection(WSCollection.from_lists(g, [(1, 2, 4), (1, 3, 5)]))
    assert is_ws_collection(WSCollection.from_lists(g, [(1, 3, 5)]))


def test_collection_invariants():
    g = GroundSet.standard(5)
    with pytest.raises(GroundSetError):
        WSCollection.from_lists(g, [(1, 2), (1, 2)])
    with pytest.raises(GroundSetError):
        WSCollection.from_lists(g, [(1, 2), (1, 2, 3)])


@pytest.mark.parametrize("n", range(4, 9))
def test_ws_matches_four_point_oracle_exhaustively(n):
    g = GroundSet.standard(n)
    for k in range(1, n):
        subs = g.k_subsets(k)
        for a, b in combinations(subs, 2):
            assert is_weakly_separated(a, b) == brute_ws(a.members, b.members, g.sigma)


def test_ws_under_nonstandard_cyclic_order():
    g = GroundSet((3, 1, 4, 2, 5))
    for a, b in combinations(g.k_subsets(2), 2):
        assert is_weakly_separated(a, b) == brute_ws(a.members, b.members, g.sigma)


@st.composite
def pairs(draw, min_n=4, max_n=12):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n - 1))
    labels = list(range(1, n + 1))
    a = draw(st.lists(st.sampled_from(labels), min_size=k, max_size=k, unique=True))
    b = draw(st.lists(st.sampled_from(labels), min_size=k, max_size=k, unique=True))
    return n, a, b


@given(pairs(), st.integers(0, 20))
def test_ws_symmetric_and_rotation_invariant(p, shift):
    n, a, b = p
    A, B = sub(n, *a), sub(n, *b)
    ws = is_weakly_separated(A, B)
    assert ws == is_weakly_separated(B, A)
    assert ws == is_weakly_separated(rotate(A, shift), rotate(B, shift))
    assert is_weakly_separated(A, A)


def hereditary_holds(A: KSubset, B: KSubset) -> bool:
    """Dropping a shared element from both members keeps a pair weakly separated."""
    if not is_weakly_separated(A, B) or A.k < 2:
        return True
    g = A.ground
    return all(
        is_weakly_separated(KSubset(g, [x for x in A.members if x != c]), KSubset(g, [x for x in B.members if x != c]))
        for c in set(A.members) & set(B.members)
    )


@settings(max_examples=200)
@given(pairs(max_n=9))
def test_hereditary_property(p):
    n, a, b = p
    assert hereditary_holds(sub(n, *a), sub(n, *b))


def test_arbitrary_subpairs_need_not_stay_separated():
    # 123 and 124 are weakly separated; their subsets 13 and 24 are not
    assert is_weakly_separated(sub(4, 1, 2, 3), sub(4, 1, 2, 4))
    assert not is_weakly_separated(sub(4, 1, 3), sub(4, 2, 4))


@pytest.mark.parametrize(
    "n,members,intervals",
    [
        (8, (1, 2, 4, 7), [(1, 2), (4,), (7,)]),
        (7, (3, 4, 5), [(3, 4, 5)]),
        (8, (2, 4, 6, 8), [(2,), (4,), (6,), (8,)]),
    ],
)
def test_cyclic_intervals_examples(n, members, intervals):
    d = cyclic_intervals(sub(n, *members))
    assert sorted(d.intervals) == intervals
    assert d.ell == len(intervals)


@given(pairs(min_n=2, max_n=14))
def test_cyclic_intervals_round_trip(p):
    n, a, _ = p
    v = sub(n, *a)
    d = cyclic_intervals(v)
    g = v.ground
    walk = [x for c, i in zip(d.complements, d.intervals) for x in (*c, *i)]
    # interlacing reproduces a rotation of sigma
    start = g.position(walk[0])
    assert walk == [g.sigma[(start + t) % n] for t in range(n)]
    assert sorted(x for i in d.intervals for x in i) == sorted(a)
    assert sum(len(i) for i in d.intervals) == v.k
    assert g.sigma[0] in d.complements[0] + d.intervals[0]
    assert d.ell == brute_intervals(a, g.sigma)
    assert is_frozen(v) == (d.ell == 1)


def test_frozen_examples():
    assert is_frozen(sub(7, 7, 1, 2))
    assert not is_frozen(sub(6, 1, 3, 5))


@pytest.mark.parametrize("n", range(2, 9))
def test_frozen_count_is_n(n):
    g = GroundSet.standard(n)
    for k in range(1, n):
        frozen = [v for v in g.k_subsets(k) if is_frozen(v)]
        assert len(frozen) == n
        assert sorted(v.members for v in frozen) == sorted(v.members for v in frozen_subsets(g, k))


def test_ground_set_validation():
    with pytest.raises(GroundSetError):
        GroundSet((1,))
    with pytest.raises(GroundSetError):
        GroundSet((1, 2, 2))
    with pytest.raises(GroundSetError):
        sub(4, 1, 2, 3, 4)
    with pytest.raises(GroundSetError):
        sub(4, 5)


def test_ground_set_keeps_foreign_labels():
    g = GroundSet.standard(6).without(3)
    assert g.sigma == (1, 2, 4, 5, 6)
    assert g.successor(2) == 4
    assert g.successor(6) == 1
    assert g.is_cyclic_interval([6, 1, 2])
    assert not g.is_cyclic_interval([2, 5])


def test_subset_printing():
    assert str(sub(8, 1, 2, 4, 7)) == "1247"
    assert str(sub(10, 1, 10)) == "[1,10]"
