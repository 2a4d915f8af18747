"""Restriction to the facets x_j = 1 (and deletion at x_j = 0) of a hypersimplex."""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import GroundSet, GroundSetError, KSubset, WSCollection, is_frozen
from .osp import DecoratedOSP

SET_TO_ONE = "set-to-one"
SET_TO_ZERO = "set-to-zero"


class RestrictionError(ValueError):
    pass


@dataclass(frozen=True)
class FacetContext:
    parent: GroundSet
    k: int
    j: int
    kind: str = SET_TO_ONE

    def __post_init__(self):
        self.parent.position(self.j)
        if self.kind not in (SET_TO_ONE, SET_TO_ZERO):
            raise RestrictionError(f"unknown restriction type {self.kind!r}")

    @property
    def child(self) -> GroundSet:
        return self.parent.without(self.j)

    @property
    def child_k(self) -> int:
        return self.k - 1 if self.kind == SET_TO_ONE else self.k


def restrict_vertex(v: KSubset, j: int) -> KSubset:
    """The vertex whose translated blade cuts the same subdivision on x_j = 1.

    Drops ``j`` itself when ``j`` is in ``v``, otherwise the first element of
    ``v`` met when walking forward from ``j``.
    """
    g = v.ground
    if v.k < 2:
        raise RestrictionError("restriction to x_j = 1 needs k >= 2")
    if j in v.members:
        drop = j
    else:
        drop = g.successor(j)
        while drop not in v.members:
            drop = g.successor(drop)
    return KSubset(g.without(j), tuple(a for a in v.members if a != drop))


def restrict_osp(o: DecoratedOSP, j: int) -> DecoratedOSP:
    """Restrict a hypersimplicial decorated partition to the facet x_j = 1.

    The block holding ``j`` loses ``j`` and one unit of weight; a block of
    weight one instead dissolves into the cyclically next block, which keeps
    its own weight.  A single remaining block means the trivial subdivision.
    """
    if o.k < 2:
        raise RestrictionError("restriction to x_j = 1 needs k >= 2")
    child = o.ground.without(j)
    a = next(i for i, b in enumerate(o.blocks) if j in b)
    blocks = list(o.blocks)
    weights = list(o.weights)
    rest = blocks[a] - {j}
    if weights[a] >= 2 or o.ell == 1:
        blocks[a] = rest
        weights[a] -= 1
    else:
        nxt = (a + 1) % o.ell
        blocks[nxt] = blocks[nxt] | rest
        del blocks[a], weights[a]
    if any(not b for b in blocks):
        raise RestrictionError(f"restriction of {o} at {j} emptied a block")
    return DecoratedOSP(child, tuple(blocks), tuple(weights)).canonical()


def restrict_collection(c: WSCollection, j: int, drop_frozen: bool = True) -> WSCollection:
    """Map every member through :func:`restrict_vertex`, merging duplicates."""
    child = c.ground.without(j)
    seen = {}
    for v in c.subsets:
        w = restrict_vertex(v, j)
        if drop_frozen and is_frozen(w):
            continue
        seen[w.members] = w
    return WSCollection(child, tuple(seen.values()))


def restrict_members(c: WSCollection, j: int) -> list[KSubset]:
    """The raw image, one entry per member, duplicates and frozen sets kept."""
    return [restrict_vertex(v, j) for v in c.subsets]


def restrict_sequence(v: KSubset, js) -> KSubset:
    for j in js:
        v = restrict_vertex(v, j)
    return v


def delete_coordinate(v: KSubset, j: int) -> KSubset:
    """The same subset, seen on the facet x_j = 0."""
    if j in v.members:
        raise RestrictionError(f"{j} belongs to {v.members}; cannot restrict to x_{j} = 0")
    try:
        return KSubset(v.ground.without(j), v.members)
    except GroundSetError as e:
        raise RestrictionError(str(e)) from None
