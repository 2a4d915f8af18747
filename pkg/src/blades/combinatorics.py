"""Ground sets with a cyclic order, k-subsets, cyclic intervals and weak separation.

Subsets are stored as sorted label tuples; bit operations go through a
position mask, where bit ``p`` is set when the label at position ``p`` of the
cyclic order belongs to the subset.  Rotating the cyclic order is then a bit
rotation, and the ordinary order of the circle is the order of the bits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GroundSetError(ValueError):
    """Raised on mismatched ground sets or invalid labels."""


@dataclass(frozen=True)
class GroundSet:
    """A finite label set together with a cyclic order ``sigma``.

    ``sigma`` lists every label once; ``sigma[0]`` plays the role of the
    first label of the cycle.  Labels need not be ``1..n`` so that facet
    restrictions can keep their original names.
    """

    sigma: tuple[int, ...]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        if len(sigma) < 2:
            raise GroundSetError("a ground set needs n >= 2 labels")
        if len(set(sigma)) != len(sigma):
            raise GroundSetError(f"cyclic order {sigma} repeats a label")
        if len(sigma) > 64:
            raise GroundSetError("at most 64 labels are supported")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "_pos", {s: p for p, s in enumerate(sigma)})

    @classmethod
    def standard(cls, n: int) -> GroundSet:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.sigma)

    @cached_property
    def labels(self) -> frozenset[int]:
        return frozenset(self.sigma)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def position(self, label: int) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise GroundSetError(f"label {label} not in ground set {self.sigma}") from None

    def mask(self, labels: Iterable[int]) -> int:
        m = 0
        for a in labels:
            m |= 1 << self.position(a)
        return m

    def labels_of(self, mask: int) -> tuple[int, ...]:
        """Labels in the position mask, sorted by label value."""
        return tuple(sorted(self.sigma[p] for p in _bits(mask)))

    def successor(self, label: int) -> int:
        return self.sigma[(self.position(label) + 1) % self.n]

    def without(self, label: int) -> GroundSet:
        """The ground set with ``label`` deleted and the induced cyclic order."""
        self.position(label)
        return GroundSet(tuple(s for s in self.sigma if s != label))

    def subset(self, members: Iterable[int]) -> KSubset:
        return KSubset(self, tuple(members))

    def k_subsets(self, k: int) -> list[KSubset]:
        """All k-subsets, in lexicographic order of their sorted labels."""
        return [KSubset(self, c) for c in combinations(sorted(self.sigma), k)]

    def is_cyclic_interval(self, labels: Iterable[int]) -> bool:
        """True for nonempty proper subsets that are contiguous on the circle."""
        m = self.mask(labels)
        if m == 0 or m == self.full_mask:
            return False
        return _run_count(m, self.n) == 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _run_count(mask: int, n: int) -> int:
    """Number of maximal cyclic runs of set bits in an n-bit mask."""
    full = (1 << n) - 1
    if mask == 0:
        return 0
    if mask == full:
        return 1
    # a run starts at p when bit p is set and bit p-1 (cyclically) is clear
    prev = ((mask << 1) | (mask >> (n - 1))) & full
    return bin(mask & ~prev).count("1")


def run_count(mask: int, n: int) -> int:
    """Cyclic run count of a position mask; exposed for the enumeration core."""
    return _run_count(mask, n)


@dataclass(frozen=True)
class KSubset:
    """A k-element subset of a ground set, i.e. the hypersimplex vertex e_I."""

    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(int(a) for a in self.members))
        if len(set(members)) != len(members):
            raise GroundSetError(f"repeated label in {members}")
        for a in members:
            self.ground.position(a)
        k = len(members)
        if not 1 <= k <= self.ground.n - 1:
            raise GroundSetError(f"need 1 <= k <= n-1, got k={k}, n={self.ground.n}")
        object.__setattr__(self, "members", members)

    @property
    def k(self) -> int:
        return len(self.members)

    @cached_property
    def mask(self) -> int:
        return self.ground.mask(self.members)

    def __contains__(self, label) -> bool:
        return label in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __str__(self):
        if self.ground.n <= 9:
            return "".join(map(str, self.members))
        return "[" + ",".join(map(str, self.members)) + "]"


@dataclass(frozen=True)
class CyclicIntervalDecomposition:
    """Maximal cyclic runs of a subset and the gaps interlaced with them.

    Reading ``complements[0], intervals[0], complements[1], intervals[1], ...``
    walks once around the cyclic order.  ``complements[j]`` is the gap that
    cyclically precedes ``intervals[j]``, and the first label of the cyclic
    order lies in ``complements[0]`` or ``intervals[0]``.  Every part is listed
    in cyclic order.
    """

    intervals: tuple[tuple[int, ...], ...]
    complements: tuple[tuple[int, ...], ...]

    @property
    def ell(self) -> int:
        return len(self.intervals)


def _check_pair(a: KSubset, b: KSubset) -> None:
    if a.ground != b.ground:
        raise GroundSetError("subsets live on different ground sets")
    if a.k != b.k:
        raise GroundSetError(f"cardinalities differ: {a.k} != {b.k}")


def ws_masks(a: int, b: int, n: int) -> bool:
    """Weak separation of two equal-size position masks.

    Walks the circle once and counts how often the owner of consecutive
    elements of the symmetric difference changes; a chord separates the two
    differences exactly when there are at most two changes.
    """
    only_a = a & ~b
    only_b = b & ~a
    if not only_a:
        return True
    changes = 0
    first = last = None
    diff = only_a | only_b
    while diff:
        low = diff & -diff
        side = bool(low & only_a)
        if last is None:
            first = side
        elif side != last:
            changes += 1
        last = side
        diff ^= low
    if last != first:
        changes += 1
    return changes <= 2


def is_weakly_separated(a: KSubset, b: KSubset) -> bool:
    _check_pair(a, b)
    return ws_masks(a.mask, b.mask, a.ground.n)


@dataclass(frozen=True)
class WSCollection:
    """A set of distinct k-subsets of one ground set."""

    ground: GroundSet
    subsets: tuple[KSubset, ...]

    def __post_init__(self):
        subsets = tuple(self.subsets)
        ks = {s.k for s in subsets}
        if len(ks) > 1:
            raise GroundSetError(f"mixed cardinalities {sorted(ks)}")
        if any(s.ground != self.ground for s in subsets):
            raise GroundSetError("subset on a foreign ground set")
        if len({s.members for s in subsets}) != len(subsets):
            raise GroundSetError("duplicate subsets in collection")
        object.__setattr__(self, "subsets", tuple(sorted(subsets, key=lambda s: s.members)))

    @classmethod
    def from_lists(cls, ground: GroundSet, lists: Iterable[Sequence[int]]) -> WSCollection:
        return cls(ground, tuple(KSubset(ground, tuple(x)) for x in lists))

    @property
    def k(self) -> int | None:
        return self.subsets[0].k if self.subsets else None

    def __len__(self):
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)


def is_ws_collection(c: WSCollection) -> bool:
    n = c.ground.n
    masks = [s.mask for s in c.subsets]
    return all(ws_masks(a, b, n) for a, b in combinations(masks, 2))


def cyclic_intervals(v: KSubset) -> CyclicIntervalDecomposition:
    g = v.ground
    n = g.n
    inside = [bool(v.mask >> p & 1) for p in range(n)]
    # walk back from sigma[0] to the start of the gap preceding its run
    start = 0
    if inside[0]:
        while inside[(start - 1) % n]:
            start -= 1
    while not inside[(start - 1) % n]:
        start -= 1
    start %= n
    intervals, gaps = [], []
    p, steps = start, 0
    while steps < n:
        gap = []
        while steps < n and not inside[p]:
            gap.append(g.sigma[p])
            p = (p + 1) % n
            steps += 1
        run = []
        while steps < n and inside[p]:
            run.append(g.sigma[p])
            p = (p + 1) % n
            steps += 1
        gaps.append(tuple(gap))
        intervals.append(tuple(run))
    return CyclicIntervalDecomposition(tuple(intervals), tuple(gaps))


def is_frozen(v: KSubset) -> bool:
    return _run_count(v.mask, v.ground.n) == 1


def frozen_subsets(ground: GroundSet, k: int) -> list[KSubset]:
    n = ground.n
    return [KSubset(ground, [ground.sigma[(i + t) % n] for t in range(k)]) for i in range(n)]


def rotate(v: KSubset, shift: int = 1) -> KSubset:
    """Move every label ``shift`` steps forward along the cyclic order."""
    g = v.ground
    n = g.n
    return KSubset(g, [g.sigma[(g.position(a) + shift) % n] for a in v.members])
