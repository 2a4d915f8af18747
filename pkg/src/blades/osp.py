"""Decorated ordered set partitions, plates and blades.

A decorated ordered set partition ``((S_1)_{s_1} ... (S_l)_{s_l})`` carries
integer weights on an ordered set partition.  Its plate is the cone cut out by
the partial-sum chain ``x_{S_1} >= s_1``, ``x_{S_1 u S_2} >= s_1 + s_2``, ...;
its blade is the union of the boundaries of the plates of all cyclic block
rotations.

Points are exact: coordinates are :class:`fractions.Fraction` values listed in
increasing label order of the ground set.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .combinatorics import GroundSet, GroundSetError, KSubset, cyclic_intervals


class OSPError(ValueError):
    pass


class OSPParseError(OSPError):
    pass


@dataclass(frozen=True)
class DecoratedOSP:
    ground: GroundSet
    blocks: tuple[frozenset[int], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(frozenset(int(a) for a in b) for b in self.blocks)
        weights = tuple(int(w) for w in self.weights)
        if len(blocks) != len(weights):
            raise OSPError("one weight per block is required")
        if any(not b for b in blocks):
            raise OSPError("blocks must be nonempty")
        union = frozenset().union(*blocks)
        if sum(len(b) for b in blocks) != len(union) or union != self.ground.labels:
            raise OSPError(f"blocks do not partition the ground set {self.ground.sigma}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def undecorated(cls, ground: GroundSet, blocks: Iterable[Iterable[int]]) -> DecoratedOSP:
        blocks = tuple(frozenset(b) for b in blocks)
        return cls(ground, blocks, (0,) * len(blocks))

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        return sum(self.weights)

    @property
    def is_trivial(self) -> bool:
        return self.ell == 1

    def is_hypersimplicial(self) -> bool:
        """Type Delta_{k,n}: every weight lies in ``1..|S_j|-1``."""
        return all(1 <= w <= len(b) - 1 for b, w in zip(self.blocks, self.weights))

    def rotation(self, r: int) -> DecoratedOSP:
        r %= self.ell
        return DecoratedOSP(self.ground, self.blocks[r:] + self.blocks[:r], self.weights[r:] + self.weights[:r])

    def rotations(self) -> list[DecoratedOSP]:
        return [self.rotation(r) for r in range(self.ell)]

    def canonical(self) -> DecoratedOSP:
        """Rotate so that the block holding the first label of the cyclic order leads."""
        first = self.ground.sigma[0]
        for r, b in enumerate(self.blocks):
            if first in b:
                return self.rotation(r)
        raise AssertionError("unreachable: blocks cover the ground set")

    def chain(self) -> list[tuple[frozenset[int], int]]:
        """The plate inequalities ``x_J >= bound`` as ``(J, bound)`` pairs."""
        out = []
        acc: frozenset[int] = frozenset()
        total = 0
        for b, w in zip(self.blocks[:-1], self.weights[:-1]):
            acc = acc | b
            total += w
            out.append((acc, total))
        return out

    def __str__(self):
        return format_osp(self)


@dataclass(frozen=True)
class Plate:
    osp: DecoratedOSP


class Blade:
    """A blade, stored by the canonical rotation of its decorated partition.

    Two partitions that differ by a cyclic block rotation give equal blades.
    """

    __slots__ = ("osp",)

    def __init__(self, osp: DecoratedOSP):
        self.osp = osp.canonical()

    @property
    def ground(self) -> GroundSet:
        return self.osp.ground

    @property
    def is_trivial(self) -> bool:
        return self.osp.is_trivial

    def plates(self) -> list[Plate]:
        return [Plate(o) for o in self.osp.rotations()]

    def __eq__(self, other):
        return isinstance(other, Blade) and self.osp == other.osp

    def __hash__(self):
        return hash(self.osp)

    def __repr__(self):
        return f"Blade({format_osp(self.osp)})"


# --- vertex -> blade --------------------------------------------------------


def blade_from_vertex(v: KSubset) -> DecoratedOSP:
    """Decorated partition whose blade agrees with ((sigma))_{e_v} on the hypersimplex.

    Block ``j`` is the gap preceding the ``j``-th cyclic interval of ``v``
    together with that interval, weighted by the interval length.  A frozen
    vertex gives the single block ``(ground)_k``.
    """
    dec = cyclic_intervals(v)
    if dec.ell == 1:
        return DecoratedOSP(v.ground, (v.ground.labels,), (v.k,))
    blocks = tuple(frozenset(c) | frozenset(i) for c, i in zip(dec.complements, dec.intervals))
    weights = tuple(len(i) for i in dec.intervals)
    return DecoratedOSP(v.ground, blocks, weights).canonical()


# --- plates ----------------------------------------------------------------


def plate_vertices(p: Plate) -> set[KSubset]:
    osp = p.osp
    chain = [(osp.ground.mask(J), b) for J, b in osp.chain()]
    out = set()
    for v in osp.ground.k_subsets(osp.k):
        m = v.mask
        if all(bin(m & J).count("1") >= b for J, b in chain):
            out.add(v)
    return out


# --- points ----------------------------------------------------------------


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(value)


class RationalPoint(tuple):
    """Exact coordinates, one per label in increasing label order."""

    def __new__(cls, coords: Iterable):
        return super().__new__(cls, (as_fraction(c) for c in coords))

    @property
    def level(self) -> Fraction:
        return sum(self, Fraction(0))

    def __sub__(self, other):
        return RationalPoint(a - b for a, b in zip(self, other))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"


def indicator(v: KSubset) -> RationalPoint:
    """The vertex e_v as a point."""
    return RationalPoint(1 if a in v.members else 0 for a in sorted(v.ground.labels))


def _coord_map(ground: GroundSet, x: Sequence[Fraction]) -> dict[int, Fraction]:
    labels = sorted(ground.labels)
    if len(x) != len(labels):
        raise OSPError(f"point has {len(x)} coordinates, ground set has {len(labels)}")
    return dict(zip(labels, x))


def scaled_coordinates(x: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integers ``D * x_i`` and the common denominator ``D``.

    Comparing scaled sums with scaled bounds keeps every test exact while the
    oracles run on plain ints.
    """
    d = 1
    for c in x:
        d = lcm(d, c.denominator)
    return [c.numerator * (d // c.denominator) for c in x], d


def _scaled_block_sums(osp: DecoratedOSP, x: Sequence[Fraction]) -> tuple[list[int], int]:
    xm = _coord_map(osp.ground, x)
    ints, d = scaled_coordinates(x)
    scaled = dict(zip(xm, ints))
    return [sum(scaled[a] for a in b) for b in osp.blocks], d


# --- membership oracles ----------------------------------------------------


def _chain_member(osp: DecoratedOSP, sums: list[int], d: int) -> bool:
    ell, w = osp.ell, osp.weights
    for r in range(ell):
        s = t = 0
        tight = False
        for m in range(ell - 1):
            s += sums[(r + m) % ell]
            t += w[(r + m) % ell] * d
            if s < t:
                break
            tight = tight or s == t
        else:
            if tight:
                return True
    return False


def _minkowski_member(osp: DecoratedOSP, sums: list[int], d: int) -> bool:
    ell, w = osp.ell, osp.weights

    def arc_ok(start: int, length: int) -> bool:
        # chain inequalities of the arc start, start+1, ..., start+length-1
        s = t = 0
        for m in range(length - 1):
            s += sums[(start + m) % ell]
            t += w[(start + m) % ell] * d
            if s < t:
                return False
        return True

    for i in range(ell):
        for j in range(i + 1, ell):
            if sum(sums[i:j]) != sum(w[i:j]) * d:
                continue
            if arc_ok(i, j - i) and arc_ok(j, ell - (j - i)):
                return True
    return False


def _forms(sums: list[int]) -> list[int]:
    ell = len(sums)
    return [sum(m * sums[(i + m) % ell] for m in range(1, ell)) for i in range(ell)]


def tropical_forms(osp: DecoratedOSP, x: Sequence) -> list[Fraction]:
    """The linear forms L_i(x) = sum_m m * x_{S_{i+m}}, m = 1..l-1."""
    sums, d = _scaled_block_sums(osp, RationalPoint(x))
    return [Fraction(f, d) for f in _forms(sums)]


def _tropical_member(sums: list[int]) -> bool:
    forms = _forms(sums)
    return forms.count(min(forms)) >= 2


METHODS = ("chain", "minkowski", "tropical")


def blade_membership(b: Blade | DecoratedOSP, x: Sequence, method: str = "chain") -> bool:
    """Whether ``x`` lies on the blade, decided by one of three descriptions.

    ``chain`` tests the boundaries of the rotated plates, ``minkowski`` the
    pairwise arc decomposition, ``tropical`` the double-minimum condition of
    the forms in :func:`tropical_forms` (undecorated blades only).
    """
    osp = b.osp if isinstance(b, Blade) else b
    x = RationalPoint(x)
    sums, d = _scaled_block_sums(osp, x)
    if sum(sums) != osp.k * d:
        raise OSPError(f"point has coordinate sum {x.level}, blade lives at level {osp.k}")
    if method == "chain":
        return _chain_member(osp, sums, d)
    if method == "minkowski":
        return _minkowski_member(osp, sums, d)
    if method == "tropical":
        if any(osp.weights):
            raise OSPError("the tropical description covers undecorated blades only; use 'chain'")
        return _tropical_member(sums)
    raise OSPError(f"unknown method {method!r}; expected one of {METHODS}")


def membership_profile(b: Blade | DecoratedOSP, x: Sequence) -> dict[str, bool]:
    """Every applicable oracle's verdict on one point, converting ``x`` only once."""
    osp = b.osp if isinstance(b, Blade) else b
    sums, d = _scaled_block_sums(osp, RationalPoint(x))
    if sum(sums) != osp.k * d:
        raise OSPError(f"point has coordinate sum {Fraction(sum(sums), d)}, blade lives at level {osp.k}")
    out = {"chain": _chain_member(osp, sums, d), "minkowski": _minkowski_member(osp, sums, d)}
    if not any(osp.weights):
        out["tropical"] = _tropical_member(sums)
    return out


def standard_blade(ground: GroundSet) -> DecoratedOSP:
    """The undecorated blade ((sigma_1, ..., sigma_n)) with singleton blocks."""
    return DecoratedOSP.undecorated(ground, ([a] for a in ground.sigma))


def translated_blade_membership(v: KSubset, x: Sequence, method: str = "chain") -> bool:
    """Membership of ``x`` in the blade ((sigma)) translated to the vertex e_v."""
    x = RationalPoint(x)
    if x.level != v.k:
        raise OSPError(f"point has coordinate sum {x.level}, expected {v.k}")
    return blade_membership(standard_blade(v.ground), x - indicator(v), method)


# --- text grammar ----------------------------------------------------------

_TOKEN = re.compile(r"^(\[[0-9,\s]*\]|[0-9]+)(?:_(-?[0-9]+))?$")


def _format_block(block: Iterable[int], digits: bool) -> str:
    labels = sorted(block)
    if digits:
        return "".join(map(str, labels))
    return "[" + ",".join(map(str, labels)) + "]"


def format_osp(osp: DecoratedOSP) -> str:
    """Print as ``((B_w B_w ...))``; blocks sorted, zero weights omitted."""
    digits = all(1 <= a <= 9 for a in osp.ground.labels)
    parts = []
    for b, w in zip(osp.blocks, osp.weights):
        s = _format_block(b, digits)
        if w:
            s += f"_{w}"
        parts.append(s)
    return "((" + " ".join(parts) + "))"


def parse_osp(text: str, ground: GroundSet | None = None) -> DecoratedOSP:
    """Parse the grammar written by :func:`format_osp`.

    ``((1,2,3))`` (commas, no spaces, no brackets) is read as the undecorated
    blade with singleton blocks.  Without ``ground`` the cyclic order is the
    sorted union of the labels.
    """
    s = text.strip()
    if not (s.startswith("((") and s.endswith("))")):
        raise OSPParseError(f"expected '((...))', got {text!r}")
    body = s[2:-2].strip()
    if not body:
        raise OSPParseError("empty partition")
    if "," in body and "[" not in body and " " not in body:
        tokens = body.split(",")
    else:
        tokens = body.split()
    blocks, weights = [], []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise OSPParseError(f"bad block {tok!r}")
        raw, w = m.group(1), m.group(2)
        if raw.startswith("["):
            inner = raw[1:-1].strip()
            labels = [int(a) for a in inner.split(",")] if inner else []
        else:
            labels = [int(c) for c in raw]
        if not labels or len(set(labels)) != len(labels):
            raise OSPParseError(f"bad block {tok!r}")
        blocks.append(frozenset(labels))
        weights.append(int(w) if w is not None else 0)
    if ground is None:
        try:
            ground = GroundSet(tuple(sorted(set().union(*blocks))))
        except GroundSetError as e:
            raise OSPParseError(str(e)) from None
    try:
        return DecoratedOSP(ground, tuple(blocks), tuple(weights))
    except OSPError as e:
        raise OSPParseError(str(e)) from None
