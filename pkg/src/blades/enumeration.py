"""Maximal weakly separated collections as maximal cliques of a compatibility graph.

Nodes are the nonfrozen k-subsets; two nodes are adjacent when weakly
separated.  Cliques are counted with Bron-Kerbosch (Tomita pivoting) over
int bitsets, with a degeneracy ordering at the top level.  The top-level
subproblems are independent and can be farmed out to worker processes.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterator

from .combinatorics import GroundSet, KSubset, WSCollection, is_ws_collection, run_count, ws_masks
from .subdivision import BladeArrangement, is_matroidal

ALL = "all"
TWO_INTERVAL = "two-interval-only"
FILTERS = (ALL, TWO_INTERVAL)


class EnumerationError(ValueError):
    pass


class TimeBudgetExceeded(RuntimeError):
    pass


@dataclass
class CompatibilityGraph:
    k: int
    n: int
    filter: str
    ground: GroundSet
    nodes: list[int]
    adjacency: list[int]
    # nodes allowed in a clique; the rest only block maximality
    candidates: int = -1

    def __post_init__(self):
        if self.candidates < 0:
            self.candidates = (1 << len(self.nodes)) - 1

    @property
    def candidate_count(self) -> int:
        return bin(self.candidates).count("1")

    @property
    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adjacency) // 2

    def subset(self, i: int) -> KSubset:
        return KSubset(self.ground, self.ground.labels_of(self.nodes[i]))

    def index_of(self, members) -> int:
        return self.nodes.index(self.ground.mask(members))

    def degree(self, i: int) -> int:
        return bin(self.adjacency[i]).count("1")

    @property
    def purity_size(self) -> int:
        return (self.k - 1) * (self.n - self.k - 1)


@dataclass
class EnumerationResult:
    k: int
    n: int
    filter: str
    count: int
    purity_size: int
    size_histogram: dict[int, int] = field(default_factory=dict)
    collections: list[tuple[int, ...]] | None = None
    elapsed_ms: float = 0.0

    @property
    def purity(self) -> bool:
        return set(self.size_histogram) <= {self.purity_size}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "filter": self.filter,
            "maximal_count": self.count,
            "purity": self.purity,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def build_graph(k: int, n: int, filter: str = ALL, sigma=None) -> CompatibilityGraph:
    """Weak-separation graph on the nonfrozen k-subsets.

    With the two-interval filter only subsets with exactly two cyclic
    intervals are clique candidates, but every nonfrozen subset stays in the
    graph: a collection counts only when no nonfrozen subset at all extends it.
    """
    if not (n <= 64 and 2 <= k <= n - 2):
        raise EnumerationError(f"need 2 <= k <= n-2 and n <= 64, got k={k}, n={n}")
    if filter not in FILTERS:
        raise EnumerationError(f"filter must be one of {FILTERS}")
    ground = GroundSet(tuple(sigma)) if sigma is not None else GroundSet.standard(n)
    if ground.n != n:
        raise EnumerationError("sigma must list n labels")
    nodes = []
    candidates = 0
    for v in ground.k_subsets(k):
        runs = run_count(v.mask, n)
        if runs == 1:
            continue
        if filter == ALL or runs == 2:
            candidates |= 1 << len(nodes)
        nodes.append(v.mask)
    adj = [0] * len(nodes)
    for i, j in combinations(range(len(nodes)), 2):
        if ws_masks(nodes[i], nodes[j], n):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return CompatibilityGraph(k, n, filter, ground, nodes, adj, candidates)


# --- Bron-Kerbosch ---------------------------------------------------------


def _degeneracy_order(adj: list[int], alive: int) -> list[int]:
    """Repeatedly remove a minimum-degree vertex of the subgraph on ``alive``."""
    deg = {i: bin(adj[i] & alive).count("1") for i in range(len(adj)) if alive >> i & 1}
    order = []
    while deg:
        v = min(deg, key=deg.__getitem__)
        order.append(v)
        del deg[v]
        alive &= ~(1 << v)
        nb = adj[v] & alive
        while nb:
            low = nb & -nb
            deg[low.bit_length() - 1] -= 1
            nb ^= low
    return order


class _Search:
    def __init__(self, adj, on_clique=None, deadline=None):
        self.adj = adj
        self.on_clique = on_clique
        self.deadline = deadline
        self.count = 0
        self.sizes: dict[int, int] = {}
        self._ticks = 0

    def run(self, R: list[int], P: int, X: int) -> None:
        if not P:
            if not X:
                self.count += 1
                self.sizes[len(R)] = self.sizes.get(len(R), 0) + 1
                if self.on_clique is not None:
                    self.on_clique(tuple(R))
            return
        if self.deadline is not None:
            self._ticks += 1
            if self._ticks & 0x3FF == 0 and time.monotonic() > self.deadline:
                raise TimeBudgetExceeded
        adj = self.adj
        # pivot: vertex of P | X with most neighbours in P
        best, pivot = -1, 0
        cand = P | X
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            c = bin(P & adj[u]).count("1")
            if c > best:
                best, pivot = c, u
            cand ^= low
        todo = P & ~adj[pivot]
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            R.append(v)
            self.run(R, P & adj[v], X & adj[v])
            R.pop()
            P &= ~low
            X |= low
            todo ^= low


def _top_level_tasks(adj: list[int], candidates: int) -> list[tuple[int, int, int]]:
    order = _degeneracy_order(adj, candidates)
    blockers = ((1 << len(adj)) - 1) & ~candidates
    tasks = []
    earlier = 0
    for v in order:
        later = candidates & ~earlier & ~(1 << v)
        tasks.append((v, adj[v] & later, adj[v] & (earlier | blockers)))
        earlier |= 1 << v
    return tasks


_WORKER_ADJ: list[int] = []


def _init_worker(adj):
    global _WORKER_ADJ
    _WORKER_ADJ = adj


def _run_chunk(chunk, deadline):
    s = _Search(_WORKER_ADJ, deadline=deadline)
    for v, P, X in chunk:
        s.run([v], P, X)
    return s.count, s.sizes


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("BLADES_THREADS", "1")))
    except ValueError:
        return 1


def iter_maximal_cliques(g: CompatibilityGraph) -> Iterator[tuple[int, ...]]:
    """Stream maximal cliques as sorted node-index tuples."""
    out: list[tuple[int, ...]] = []
    s = _Search(g.adjacency, on_clique=lambda R: out.append(tuple(sorted(R))))
    for v, P, X in _top_level_tasks(g.adjacency, g.candidates):
        s.run([v], P, X)
        yield from out
        out.clear()


def count_maximal_collections(
    g: CompatibilityGraph,
    threads: int | None = None,
    materialize: bool = False,
    on_clique: Callable[[tuple[int, ...]], None] | None = None,
    time_budget: float | None = None,
) -> EnumerationResult:
    """Count maximal cliques of ``g`` exactly.

    ``materialize`` stores every clique (node indices) on the result and
    ``on_clique`` streams them; both force a serial run.  Raises
    :class:`TimeBudgetExceeded` once ``time_budget`` seconds have passed.
    """
    t0 = time.monotonic()
    deadline = t0 + time_budget if time_budget else None
    threads = default_threads() if threads is None else max(1, threads)
    tasks = _top_level_tasks(g.adjacency, g.candidates)
    stored: list[tuple[int, ...]] | None = [] if materialize else None
    if materialize or on_clique is not None or threads == 1 or len(tasks) < 2:
        def emit(R):
            R = tuple(sorted(R))
            if stored is not None:
                stored.append(R)
            if on_clique is not None:
                on_clique(R)

        s = _Search(g.adjacency, on_clique=emit if (materialize or on_clique) else None, deadline=deadline)
        for v, P, X in tasks:
            s.run([v], P, X)
        count, sizes = s.count, s.sizes
    else:
        # interleave so heavy and light subproblems spread over the chunks
        nchunks = threads * 4
        chunks = [tasks[i::nchunks] for i in range(nchunks)]
        count, sizes = 0, {}
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(g.adjacency,)) as ex:
            for c, sz in ex.map(_run_chunk, chunks, [deadline] * nchunks):
                count += c
                for key, val in sz.items():
                    sizes[key] = sizes.get(key, 0) + val
    return EnumerationResult(
        g.k, g.n, g.filter, count, g.purity_size, dict(sorted(sizes.items())), stored,
        (time.monotonic() - t0) * 1000.0,
    )


def enumerate_collections(k: int, n: int, filter: str = ALL, **kw) -> EnumerationResult:
    return count_maximal_collections(build_graph(k, n, filter), **kw)


def verify_purity(g: CompatibilityGraph) -> bool:
    """Every maximal clique has (k-1)(n-k-1) nodes."""
    return count_maximal_collections(g).purity


def maximal_collections(k: int, n: int, filter: str = ALL, sigma=None) -> list[WSCollection]:
    """Every maximal weakly separated collection of nonfrozen k-subsets."""
    g = build_graph(k, n, filter, sigma)
    return [WSCollection(g.ground, tuple(g.subset(i) for i in clique)) for clique in iter_maximal_cliques(g)]


def ws_pair_count(g: CompatibilityGraph, containing=None) -> int:
    if containing is None:
        return g.edge_count
    return g.degree(g.index_of(containing))


# --- theorem cross-check ---------------------------------------------------


@dataclass
class CrossValidationReport:
    k: int
    n: int
    checked: int = 0
    ws_true: int = 0
    discrepancies: list[tuple[tuple[int, ...], ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def cross_validate_theorem(k: int, n: int, sample_size: int | None = None, sizes=(2, 3), seed: int = 0,
                           collections=None) -> CrossValidationReport:
    """Compare pairwise weak separation with matroidality of the induced subdivision.

    Exhaustive over all collections of the given ``sizes`` of nonfrozen
    vertices when ``sample_size`` is None, otherwise ``sample_size`` random
    collections per size.
    """
    ground = GroundSet.standard(n)
    nonfrozen = [v for v in ground.k_subsets(k) if run_count(v.mask, n) > 1]
    rep = CrossValidationReport(k, n)
    if collections is None:
        rng = random.Random(seed)

        def gen():
            for m in sizes:
                if sample_size is None:
                    yield from combinations(nonfrozen, m)
                else:
                    for _ in range(sample_size):
                        yield tuple(rng.sample(nonfrozen, m))

        collections = gen()
    for coll in collections:
        coll = tuple(v if isinstance(v, KSubset) else KSubset(ground, tuple(v)) for v in coll)
        ws = is_ws_collection(WSCollection(ground, coll))
        matroidal, _ = is_matroidal(BladeArrangement.from_vertices(ground, coll))
        rep.checked += 1
        rep.ws_true += ws
        if ws != matroidal:
            rep.discrepancies.append(tuple(v.members for v in coll))
    return rep


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)
