"""Split systems of the second hypersimplex and the trees they determine."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .boundary import restrict_collection
from .combinatorics import GroundSet, WSCollection, is_ws_collection
from .osp import DecoratedOSP, blade_from_vertex
from .subdivision import two_split_compatible


class SplitError(ValueError):
    pass


class IncompatibleSplits(SplitError):
    def __init__(self, a: Split, b: Split):
        super().__init__(f"splits {a} and {b} are not compatible")
        self.pair = (a, b)


@dataclass(frozen=True)
class Split:
    """An unordered bipartition {S, S^c}; ``side`` avoids the smallest label."""

    ground: GroundSet
    side: frozenset[int]

    def __post_init__(self):
        side = frozenset(self.side)
        labels = self.ground.labels
        if not side <= labels or not 2 <= len(side) <= len(labels) - 2:
            raise SplitError(f"{sorted(side)} is not a split side of {sorted(labels)}")
        if min(labels) in side:
            side = labels - side
        object.__setattr__(self, "side", side)

    @property
    def other(self) -> frozenset[int]:
        return self.ground.labels - self.side

    def sort_key(self):
        return (len(self.side), sorted(self.side))

    def __str__(self):
        return f"{_fmt(self.side)}|{_fmt(self.other)}"


def _fmt(labels) -> str:
    labels = sorted(labels)
    if all(1 <= a <= 9 for a in labels):
        return "".join(map(str, labels))
    return ",".join(map(str, labels))


def splits_from_blades(blades: Iterable[DecoratedOSP]) -> set[Split]:
    out = set()
    for o in blades:
        if o.is_trivial:
            continue
        if o.ell != 2:
            raise SplitError(f"{o} has {o.ell} blocks; a split needs exactly two")
        out.add(Split(o.ground, o.blocks[0]))
    return out


@dataclass
class SplitTree:
    """Unrooted tree; leaves are ground-set labels, internal nodes strings."""

    ground: GroundSet
    adj: dict = field(default_factory=dict)

    @property
    def leaves(self) -> list[int]:
        return list(self.ground.sigma)

    def internal_nodes(self) -> list[str]:
        return [v for v in self.adj if isinstance(v, str)]

    def edges(self) -> list[tuple]:
        # sorted by node name so DOT output does not depend on set order
        def key(x):
            return (0, x, 0) if isinstance(x, str) else (1, "", x)

        seen = set()
        for u in self.adj:
            for w in self.adj[u]:
                seen.add((u, w) if key(u) <= key(w) else (w, u))
        return sorted(seen, key=lambda e: (key(e[0]), key(e[1])))

    def internal_edges(self) -> list[tuple[str, str]]:
        return [(u, w) for u, w in self.edges() if isinstance(u, str) and isinstance(w, str)]

    def side_leaves(self, u, w) -> frozenset[int]:
        """Leaves reached from ``w`` without crossing the edge back to ``u``."""
        stack, seen, out = [w], {u, w}, set()
        while stack:
            x = stack.pop()
            if not isinstance(x, str):
                out.add(x)
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(out)

    def splits(self) -> set[Split]:
        return {Split(self.ground, self.side_leaves(u, w)) for u, w in self.internal_edges()}

    def to_dot(self, name: str = "tree") -> str:
        lines = [f"graph {name} {{"]
        for a in self.ground.sigma:
            lines.append(f'  l{a} [label="{a}", shape=plaintext];')
        for v in sorted(self.internal_nodes()):
            lines.append(f'  {v} [label="", shape=point];')

        def node(x):
            return x if isinstance(x, str) else f"l{x}"

        for u, w in self.edges():
            lines.append(f"  {node(u)} -- {node(w)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def star_tree(ground: GroundSet) -> SplitTree:
    t = SplitTree(ground)
    t.adj["u0"] = set(ground.sigma)
    for a in ground.sigma:
        t.adj[a] = {"u0"}
    return t


def tree_from_splits(splits: Iterable[Split], ground: GroundSet | None = None) -> SplitTree:
    """Build the tree with exactly these internal-edge bipartitions.

    Starts from a star and inserts splits in canonical order; each split
    goes in at the node whose branches all lie on one side of it.
    """
    splits = sorted(set(splits), key=Split.sort_key)
    if ground is None:
        if not splits:
            raise SplitError("an empty split set needs an explicit ground set")
        ground = splits[0].ground
    for s in splits:
        if s.ground != ground:
            raise SplitError("splits live on different ground sets")
    for a, b in combinations(splits, 2):
        if not two_split_compatible(a.side, b.side, ground):
            raise IncompatibleSplits(a, b)
    t = star_tree(ground)
    for i, s in enumerate(splits, start=1):
        _insert(t, s, f"u{i}")
    return t


def _insert(t: SplitTree, s: Split, new: str) -> None:
    A, B = s.side, s.other
    for v in t.internal_nodes():
        toward_a, toward_b = [], []
        for w in t.adj[v]:
            leaves = t.side_leaves(v, w)
            if leaves <= A:
                toward_a.append(w)
            elif leaves <= B:
                toward_b.append(w)
            else:
                break
        else:
            if len(toward_a) >= 2 and len(toward_b) >= 2:
                t.adj[new] = {v}
                t.adj[v].add(new)
                for w in toward_a:
                    t.adj[v].discard(w)
                    t.adj[w].discard(v)
                    t.adj[w].add(new)
                    t.adj[new].add(w)
                return
    raise SplitError(f"no node accepts split {s}")


@dataclass
class FacetTree:
    j: int
    collection: WSCollection
    blades: list[DecoratedOSP]
    splits: set[Split]
    tree: SplitTree


def tree_arrangement(c: WSCollection) -> list[FacetTree]:
    """One tree per facet x_j = 1 of a weakly separated collection of 3-subsets."""
    if c.k is not None and c.k != 3:
        raise SplitError(f"tree arrangements need k = 3, got k = {c.k}")
    if not is_ws_collection(c):
        raise SplitError("collection is not weakly separated")
    out = []
    for j in c.ground.sigma:
        face = restrict_collection(c, j, drop_frozen=True)
        blades = [blade_from_vertex(v) for v in face]
        splits = splits_from_blades(blades)
        out.append(FacetTree(j, face, blades, splits, tree_from_splits(splits, face.ground)))
    return out


def arrangement_dot(facets: list[FacetTree]) -> str:
    return "".join(f.tree.to_dot(f"facet_{f.j}") for f in facets)
