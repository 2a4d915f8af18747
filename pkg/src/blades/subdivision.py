"""Subdivisions of a hypersimplex induced by blade arrangements.

Cells are kept as sets of 0/1 vertices.  Internally a vertex set is an int
whose bit ``i`` marks the ``i``-th k-subset of the ground set in
lexicographic order, so intersecting cells is a single ``&``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .combinatorics import GroundSet, KSubset
from .osp import Blade, DecoratedOSP, OSPError, RationalPoint, blade_from_vertex, scaled_coordinates


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class Inequality:
    """``x_subset >= bound``."""

    subset: frozenset[int]
    bound: int

    def __str__(self):
        return f"x_{{{','.join(map(str, sorted(self.subset)))}}} >= {self.bound}"


@dataclass
class Cell:
    ground: GroundSet
    k: int
    vertices: frozenset[KSubset]
    inequalities: tuple[Inequality, ...]
    dim: int
    positroid: bool = False

    def sorted_vertices(self) -> list[tuple[int, ...]]:
        return sorted(v.members for v in self.vertices)

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        """Test the defining inequalities (and the hypersimplex box) at ``x``."""
        labels = sorted(self.ground.labels)
        xm = dict(zip(labels, RationalPoint(x)))
        if strict:
            box = all(0 < c < 1 for c in xm.values())
            return box and all(sum(xm[a] for a in q.subset) > q.bound for q in self.inequalities)
        box = all(0 <= c <= 1 for c in xm.values())
        return box and all(sum(xm[a] for a in q.subset) >= q.bound for q in self.inequalities)


@dataclass
class BladeArrangement:
    """Blades on one ground set; vertex entries are converted on construction."""

    ground: GroundSet
    k: int
    entries: list[Blade] = field(default_factory=list)

    @classmethod
    def from_vertices(cls, ground: GroundSet, vertices: Iterable[KSubset | Sequence[int]]) -> BladeArrangement:
        vs = [v if isinstance(v, KSubset) else KSubset(ground, tuple(v)) for v in vertices]
        ks = {v.k for v in vs}
        if len(ks) != 1:
            raise ArrangementError(f"vertices need one common k, got {sorted(ks)}")
        return cls(ground, ks.pop(), [Blade(blade_from_vertex(v)) for v in vs])

    @classmethod
    def from_osps(cls, osps: Iterable[DecoratedOSP]) -> BladeArrangement:
        osps = list(osps)
        if not osps:
            raise ArrangementError("need at least one blade to infer the ground set")
        ground, k = osps[0].ground, osps[0].k
        for o in osps:
            if o.ground != ground or o.k != k:
                raise ArrangementError("blades must share the ground set and level k")
            if not o.is_hypersimplicial():
                raise ArrangementError(f"{o} is not of hypersimplicial type")
        return cls(ground, k, [Blade(o) for o in osps])


@dataclass
class Subdivision:
    cells: list[Cell]
    edges: list[tuple[int, int]]
    source: BladeArrangement

    @property
    def dual_graph(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.cells))}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


# --- exact linear algebra --------------------------------------------------


def _rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free elimination."""
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [p[c] * a - f * b for a, b in zip(rows[i], p)]
        rank += 1
    return rank


def affine_dimension(vertex_masks: Iterable[int], n: int) -> int:
    """Affine dimension of a set of 0/1 points given as label-position masks."""
    pts = list(vertex_masks)
    if not pts:
        return -1
    base = pts[0]
    rows = [[((m >> p) & 1) - ((base >> p) & 1) for p in range(n)] for m in pts[1:]]
    return _rank(rows)


class _Lattice:
    """The vertices of Delta_{k,n} and cached vertex-set computations."""

    def __init__(self, ground: GroundSet, k: int):
        self.ground = ground
        self.k = k
        self.vertices = ground.k_subsets(k)
        self.masks = [v.mask for v in self.vertices]
        self.all = (1 << len(self.vertices)) - 1
        self._dim = lru_cache(maxsize=None)(self._dim_uncached)

    def members(self, vset: int) -> list[int]:
        out = []
        while vset:
            low = vset & -vset
            out.append(self.masks[low.bit_length() - 1])
            vset ^= low
        return out

    def _dim_uncached(self, vset: int) -> int:
        return affine_dimension(self.members(vset), self.ground.n)

    def dim(self, vset: int) -> int:
        return self._dim(vset)

    def satisfying(self, chain: list[tuple[frozenset[int], int]]) -> int:
        cm = [(self.ground.mask(J), b) for J, b in chain]
        out = 0
        for i, m in enumerate(self.masks):
            if all(bin(m & J).count("1") >= b for J, b in cm):
                out |= 1 << i
        return out

    def to_subsets(self, vset: int) -> frozenset[KSubset]:
        return frozenset(self.vertices[i] for i in range(len(self.vertices)) if vset >> i & 1)


def _is_positroid_ineq(ground: GroundSet, ineqs: Iterable[Inequality]) -> bool:
    return all(ground.is_cyclic_interval(q.subset) for q in ineqs)


def induce_subdivision(arr: BladeArrangement) -> Subdivision:
    """Common refinement of the multi-splits induced by each blade.

    Each blade contributes one plate per cyclic rotation; a cell is a
    full-dimensional intersection of one plate per blade.  Refinement is
    done blade by blade, merging cells with equal vertex sets as it goes.
    """
    g, k, n = arr.ground, arr.k, arr.ground.n
    lat = _Lattice(g, k)
    full = n - 1
    cells: dict[int, tuple[Inequality, ...]] = {lat.all: ()}
    for blade in arr.entries:
        osp = blade.osp
        if osp.ground != g or osp.k != k:
            raise ArrangementError(f"blade {osp} does not live on Delta_{{{k},{n}}}")
        if osp.is_trivial:
            continue
        plates = []
        for rot in osp.rotations():
            chain = rot.chain()
            plates.append((lat.satisfying(chain), tuple(Inequality(J, b) for J, b in chain)))
        refined: dict[int, tuple[Inequality, ...]] = {}
        for vset, ineqs in cells.items():
            for pmask, pineqs in plates:
                m = vset & pmask
                if m and m not in refined and lat.dim(m) == full:
                    refined[m] = ineqs + pineqs
        cells = refined
    out = []
    for vset in sorted(cells, key=lambda m: sorted(v.members for v in lat.to_subsets(m))):
        ineqs = cells[vset]
        c = Cell(g, k, lat.to_subsets(vset), ineqs, full)
        c.positroid = _is_positroid_ineq(g, ineqs) and is_matroid_cell(c)
        out.append(c)
    sub = Subdivision(out, [], arr)
    sub.edges = _facet_edges(out, lat)
    return sub


def _facet_edges(cells: list[Cell], lat: _Lattice) -> list[tuple[int, int]]:
    index = {v: i for i, v in enumerate(lat.vertices)}
    vsets = [sum(1 << index[v] for v in c.vertices) for c in cells]
    n = lat.ground.n
    return [(a, b) for a, b in combinations(range(len(cells)), 2)
            if lat.dim(vsets[a] & vsets[b]) == n - 2]


def dual_graph(s: Subdivision) -> dict[int, list[int]]:
    """Adjacency of cells sharing a facet (an (n-2)-dimensional intersection)."""
    return s.dual_graph


def dual_graph_dot(s: Subdivision, name: str = "dual") -> str:
    """DOT text; each node lists its vertices one basis per line."""
    lines = [f"graph {name} {{", "  node [shape=box];"]
    digits = all(1 <= a <= 9 for a in s.source.ground.labels)
    for i, c in enumerate(s.cells):
        rows = ["".join(map(str, v)) if digits else ",".join(map(str, v)) for v in c.sorted_vertices()]
        label = "\\n".join(rows)
        lines.append(f'  c{i} [label="{label}"];')
    for a, b in s.edges:
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- matroid tests ---------------------------------------------------------


def exchange_violation(bases: Iterable[int]) -> tuple[int, int, int] | None:
    """First ``(B1, B2, a)`` breaking basis exchange, as bitmasks, or None."""
    bs = set(bases)
    for b1 in bs:
        for b2 in bs:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            while only1:
                a = only1 & -only1
                only1 ^= a
                rest = b1 ^ a
                cand = only2
                ok = False
                while cand:
                    b = cand & -cand
                    cand ^= b
                    if rest | b in bs:
                        ok = True
                        break
                if not ok:
                    return b1, b2, a
    return None


def is_matroid_cell(c: Cell) -> bool:
    if not c.vertices:
        raise ArrangementError("empty cell")
    return exchange_violation(v.mask for v in c.vertices) is None


def is_matroidal(arr: BladeArrangement) -> tuple[bool, Cell | None]:
    for cell in induce_subdivision(arr).cells:
        if not is_matroid_cell(cell):
            return False, cell
    return True, None


def cell_from_inequalities(ground: GroundSet, k: int, ineqs: Iterable[tuple[Iterable[int], int]]) -> Cell:
    """The cell of all k-subsets satisfying ``x_J >= b`` for each ``(J, b)``."""
    ineqs = tuple(Inequality(frozenset(J), int(b)) for J, b in ineqs)
    lat = _Lattice(ground, k)
    vset = lat.satisfying([(q.subset, q.bound) for q in ineqs])
    return Cell(ground, k, lat.to_subsets(vset), ineqs, lat.dim(vset))


# --- walls of a translated blade ------------------------------------------


@dataclass(frozen=True)
class WallFace:
    """Codimension-one face of the translated fan ((sigma))_{e_v}.

    Points ``x`` with ``x_A >= |v & A|`` for the arcs ``A`` of ``sigma``
    starting at position ``start``, with equality on the arc of length ``tight``.
    """

    start: int
    tight: int
    arcs: tuple[frozenset[int], ...]
    bounds: tuple[int, ...]


@lru_cache(maxsize=None)
def translated_blade_walls(v: KSubset) -> tuple[WallFace, ...]:
    """Faces of ((sigma))_{e_v} that reach the interior of Delta_{k,n}.

    Each face meets Delta_{k,n} in an alcoved polytope, so its vertices are
    0/1 points.  It reaches the interior exactly when those vertices span an
    (n-2)-dimensional set that no facet x_i = 0 or x_i = 1 contains.
    """
    g, n, k = v.ground, v.ground.n, v.k
    masks = [w.mask for w in g.k_subsets(k)]
    out = []
    for r in range(n):
        arcs = tuple(frozenset(g.sigma[(r + t) % n] for t in range(length)) for length in range(1, n))
        arc_masks = [g.mask(a) for a in arcs]
        bounds = tuple(bin(v.mask & a).count("1") for a in arc_masks)
        ok = [m for m in masks if all(bin(m & a).count("1") >= b for a, b in zip(arc_masks, bounds))]
        for t in range(n - 1):
            face = [m for m in ok if bin(m & arc_masks[t]).count("1") == bounds[t]]
            if not face:
                continue
            common = face[0]
            union = 0
            for m in face:
                common &= m
                union |= m
            if common or union != g.full_mask:
                continue
            if affine_dimension(face, n) == n - 2:
                out.append(WallFace(r, t + 1, arcs, bounds))
    return tuple(out)


def translated_blade_wall_membership(v: KSubset, x: Sequence) -> bool:
    """Whether ``x`` lies on a wall the translated blade cuts into Delta_{k,n}.

    The walls are the closure of ((sigma))_{e_v} intersected with the interior
    of the hypersimplex.  Unlike the full translated blade, this set ignores
    pieces of the blade lying entirely in the boundary of Delta_{k,n}.
    """
    x = RationalPoint(x)
    if any(c < 0 or c > 1 for c in x) or x.level != v.k:
        return False
    ints, d = scaled_coordinates(x)
    xm = dict(zip(sorted(v.ground.labels), ints))
    for f in translated_blade_walls(v):
        vals = [sum(xm[a] for a in arc) for arc in f.arcs]
        if all(s >= b * d for s, b in zip(vals, f.bounds)) and vals[f.tight - 1] == f.bounds[f.tight - 1] * d:
            return True
    return False


# --- splits and counting ---------------------------------------------------


def two_split_compatible(S: Iterable[int], T: Iterable[int], ground: GroundSet) -> bool:
    """At least one of S&T, S&T^c, S^c&T, S^c&T^c is empty."""
    S, T = frozenset(S), frozenset(T)
    U = ground.labels
    for X in (S, T):
        if not X <= U or not 2 <= len(X) <= len(U) - 2:
            raise ArrangementError(f"split side {sorted(X)} needs 2 <= |S| <= n-2")
    Sc, Tc = U - S, U - T
    return not (S & T and S & Tc and Sc & T and Sc & Tc)


def eulerian_number(a: int, m: int) -> int:
    """Permutations of ``1..m`` with exactly ``a`` descents."""
    if m < 1 or not 0 <= a <= m - 1:
        raise ValueError(f"need 0 <= a <= m-1, got a={a}, m={m}")
    row = [1]
    for size in range(2, m + 1):
        row = [(j + 1) * (row[j] if j < len(row) else 0) + (size - j) * (row[j - 1] if j >= 1 else 0)
               for j in range(size)]
    return row[a]


def hypersimplex_point(ground: GroundSet, weights: dict[KSubset, Fraction]) -> RationalPoint:
    """Convex combination of vertices; weights must sum to one."""
    total = sum(weights.values(), Fraction(0))
    if total != 1:
        raise OSPError("convex weights must sum to 1")
    labels = sorted(ground.labels)
    return RationalPoint(sum((w for v, w in weights.items() if a in v.members), Fraction(0)) for a in labels)
