"""Global minimum cuts of weighted undirected graphs, exactly.

Three routes to the same answer, kept deliberately independent so they
can cross-check each other:

* :func:`stoer_wagner`: deterministic maximum-adjacency phases with a
  lazy-deletion heap, O(|V||E| + |V|^2 log |V|).
* :func:`karger_stein`: randomized recursive contraction, reproducible
  for a fixed (seed, trials) pair.
* :func:`brute_force_mincut`: exhaustive enumeration, the oracle.

All weights are nonnegative ``Fraction`` values and every comparison is
exact, so ties and minima are bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from typing import Iterable

from .errors import EmptySide, TooLarge
from .lattice import ZERO, GramMatrix, as_rational
from .rng import Xoshiro256StarStar, derive_seeds

BRUTE_FORCE_LIMIT = 24

# Below this many supervertices Karger-Stein switches to exhaustive search.
_CONTRACTION_BASE = 6


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph on vertices 0..vertex_count-1 with rational weights.

    `weights` maps pairs (i, j) with i < j to strictly positive weights;
    absent pairs weigh zero.  Loops are never stored: they cannot change
    the weight of any cut.  Treat instances as immutable.
    """

    vertex_count: int
    weights: dict[tuple[int, int], Fraction]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "WeightedGraph":
        """Build a graph, merging parallel edges and dropping zero weights."""
        if vertex_count < 2:
            raise ValueError("a graph needs at least 2 vertices")
        weights: dict[tuple[int, int], Fraction] = {}
        for i, j, w in edges:
            if not 0 <= i < vertex_count or not 0 <= j < vertex_count:
                raise ValueError(f"edge ({i},{j}) is out of range")
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed")
            weight = as_rational(w)
            if weight < 0:
                raise ValueError(f"edge ({i},{j}) has negative weight {weight}")
            if not weight:
                continue
            key = (i, j) if i < j else (j, i)
            weights[key] = weights.get(key, ZERO) + weight
        return cls(vertex_count, weights)

    def weight(self, i: int, j: int) -> Fraction:
        if i == j:
            return ZERO
        key = (i, j) if i < j else (j, i)
        return self.weights.get(key, ZERO)

    def adjacency(self) -> list[dict[int, Fraction]]:
        """Neighbor maps, one per vertex."""
        adj: list[dict[int, Fraction]] = [{} for _ in range(self.vertex_count)]
        for (i, j), w in self.weights.items():
            adj[i][j] = w
            adj[j][i] = w
        return adj


@dataclass(frozen=True)
class Cut:
    """One side of a graph cut together with its exact crossing weight.

    The complement side is an equally valid representative of the same
    cut; algorithms return whichever side they discovered.
    """

    side: tuple[int, ...]
    weight: Fraction


def graph_from_gram(g: GramMatrix) -> WeightedGraph:
    """Graph whose edge weights are the negated off-diagonal Gram entries.

    Vertex i stands for superbase vector i; a strictly negative q_ij
    becomes an edge of weight -q_ij, and q_ij = 0 means no edge.  The
    diagonal is ignored.
    """
    edges = []
    for i in range(g.size):
        row = g.entries[i]
        for j in range(i + 1, g.size):
            if row[j] < 0:
                edges.append((i, j, -row[j]))
    return WeightedGraph.from_edges(g.size, edges)


def cut_weight(graph: WeightedGraph, side: Iterable[int]) -> Cut:
    """Exact total weight of the edges crossing between `side` and the rest."""
    chosen = set(side)
    for v in chosen:
        if not 0 <= v < graph.vertex_count:
            raise ValueError(f"vertex {v} is out of range")
    if not chosen or len(chosen) == graph.vertex_count:
        raise EmptySide("a cut needs a nonempty side and a nonempty complement")
    total = ZERO
    for (i, j), w in graph.weights.items():
        if (i in chosen) != (j in chosen):
            total += w
    return Cut(tuple(sorted(chosen)), total)


def stoer_wagner(graph: WeightedGraph) -> Cut:
    """Deterministic global minimum cut.

    Repeats maximum-adjacency phases, each time merging the two vertices
    added last; the lightest cut-of-the-phase is a global minimum cut.
    Phases start from the lowest active index and break adjacency ties
    toward lower indices, so the result is a pure function of the graph.
    A disconnected graph legitimately yields a weight-0 cut.
    """
    adj = {v: nbrs for v, nbrs in enumerate(graph.adjacency())}
    members: dict[int, list[int]] = {v: [v] for v in range(graph.vertex_count)}
    active = list(range(graph.vertex_count))
    best_side: tuple[int, ...] | None = None
    best_weight: Fraction | None = None

    while len(active) > 1:
        start = active[0]
        added = {start}
        order = [start]
        key: dict[int, Fraction] = {}
        heap: list[tuple[Fraction, int]] = []
        for v in active:
            if v == start:
                continue
            key[v] = adj[start].get(v, ZERO)
            heappush(heap, (-key[v], v))
        last_key = ZERO
        while len(order) < len(active):
            while True:
                neg, v = heappop(heap)
                if v not in added and key[v] == -neg:
                    break
            added.add(v)
            order.append(v)
            last_key = -neg
            for u, w in adj[v].items():
                if u not in added:
                    key[u] += w
                    heappush(heap, (-key[u], u))

        t = order[-1]
        s = order[-2]
        if best_weight is None or last_key < best_weight:
            best_weight = last_key
            best_side = tuple(sorted(members[t]))

        for u, w in adj[t].items():
            if u == s:
                continue
            merged = adj[s].get(u, ZERO) + w
            adj[s][u] = merged
            adj[u][s] = merged
            del adj[u][t]
        adj[s].pop(t, None)
        del adj[t]
        members[s].extend(members[t])
        del members[t]
        active.remove(t)

    assert best_side is not None and best_weight is not None
    return Cut(best_side, best_weight)


def default_trial_count(vertex_count: int) -> int:
    """ceil((log2 |V|)^2) + 8, the default randomized trial count."""
    return math.ceil(math.log2(vertex_count) ** 2) + 8


def _subproblem_size(order: int) -> int:
    """ceil(1 + order / sqrt(2)), computed without floating point."""
    k = math.isqrt(order * order // 2)
    while 2 * k * k < order * order:
        k += 1
    return 1 + k


class _Contraction:
    """Mutable contraction state: surviving vertices and merged members."""

    __slots__ = ("adj", "members")

    def __init__(self, adj: dict[int, dict[int, Fraction]],
                 members: dict[int, list[int]]):
        self.adj = adj
        self.members = members

    @classmethod
    def from_graph(cls, graph: WeightedGraph) -> "_Contraction":
        adj = {v: nbrs for v, nbrs in enumerate(graph.adjacency())}
        return cls(adj, {v: [v] for v in range(graph.vertex_count)})

    def clone(self) -> "_Contraction":
        return _Contraction(
            {v: dict(nbrs) for v, nbrs in self.adj.items()},
            {v: list(m) for v, m in self.members.items()},
        )

    def order(self) -> int:
        return len(self.adj)

    def merge(self, keep: int, drop: int) -> None:
        for u, w in self.adj[drop].items():
            if u == keep:
                continue
            merged = self.adj[keep].get(u, ZERO) + w
            self.adj[keep][u] = merged
            self.adj[u][keep] = merged
            del self.adj[u][drop]
        self.adj[keep].pop(drop, None)
        del self.adj[drop]
        self.members[keep].extend(self.members[drop])
        del self.members[drop]

    def pick_weighted_edge(self, rng: Xoshiro256StarStar):
        """A random edge, chosen with probability proportional to weight."""
        verts = sorted(self.adj)
        total = ZERO
        for i in verts:
            for j, w in self.adj[i].items():
                if j > i:
                    total += w
        if not total:
            return None
        r = total * Fraction(rng.next_u64(), 1 << 64)
        acc = ZERO
        for i in verts:
            for j in sorted(self.adj[i]):
                if j <= i:
                    continue
                acc += self.adj[i][j]
                if r < acc:
                    return (i, j)
        raise AssertionError("weighted edge walk must terminate")

    def zero_cut(self) -> Cut:
        side = min(self.adj)
        return Cut(tuple(sorted(self.members[side])), ZERO)


def _contract_to(state: _Contraction, target: int,
                 rng: Xoshiro256StarStar) -> bool:
    """Contract random edges until `target` vertices remain.

    Returns False when the state ran out of edges first, in which case a
    zero-weight cut exists and contraction is pointless.
    """
    while state.order() > target:
        edge = state.pick_weighted_edge(rng)
        if edge is None:
            return False
        state.merge(*edge)
    return True


def _exhaustive_cut(state: _Contraction) -> Cut:
    """Best cut of a small contracted graph by direct enumeration."""
    verts = sorted(state.adj)
    anchor, rest = verts[0], verts[1:]
    pairs = [
        (i, j, w)
        for i in verts
        for j, w in sorted(state.adj[i].items())
        if j > i
    ]
    best_weight: Fraction | None = None
    best_side: tuple[int, ...] | None = None
    full = (1 << len(rest)) - 1
    for mask in range(1 << len(rest)):
        if mask == full:
            continue
        side = {anchor}
        for b, v in enumerate(rest):
            if mask >> b & 1:
                side.add(v)
        w = ZERO
        for i, j, weight in pairs:
            if (i in side) != (j in side):
                w += weight
        if best_weight is None or w < best_weight:
            best_weight = w
            merged: list[int] = []
            for v in side:
                merged.extend(state.members[v])
            best_side = tuple(sorted(merged))
    assert best_side is not None and best_weight is not None
    return Cut(best_side, best_weight)


def _recursive_contraction(state: _Contraction,
                           rng: Xoshiro256StarStar) -> Cut:
    if state.order() <= _CONTRACTION_BASE:
        return _exhaustive_cut(state)
    target = _subproblem_size(state.order())
    best: Cut | None = None
    for _ in range(2):
        branch = state.clone()
        if not _contract_to(branch, target, rng):
            return branch.zero_cut()
        candidate = _recursive_contraction(branch, rng)
        if best is None or candidate.weight < best.weight:
            best = candidate
    assert best is not None
    return best


def karger_stein(graph: WeightedGraph, seed: int, trials: int) -> Cut:
    """Randomized minimum cut by repeated recursive contraction.

    Runs `trials` independent trials and returns the lightest cut found
    (ties resolved toward the earliest trial).  Each trial's generator is
    seeded from its own splitmix64-derived stream, so the result depends
    only on (graph, seed, trials) and trials could run in any order or in
    parallel without changing it.  The returned weight is always an upper
    bound on the true minimum.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    base = _Contraction.from_graph(graph)
    best: Cut | None = None
    for trial_seed in derive_seeds(seed, trials):
        rng = Xoshiro256StarStar(trial_seed)
        candidate = _recursive_contraction(base.clone(), rng)
        if best is None or candidate.weight < best.weight:
            best = candidate
    assert best is not None
    return best


def brute_force_mincut(graph: WeightedGraph) -> Cut:
    """Exhaustive minimum cut; the oracle the fast algorithms are tested against.

    Enumerates every side containing vertex 0 (each distinct cut exactly
    once).  Ties break toward the smaller side, then the lexicographically
    smallest sorted index list.  Refuses graphs with more than 24 vertices.
    """
    count = graph.vertex_count
    if count > BRUTE_FORCE_LIMIT:
        raise TooLarge(
            f"{count} vertices means {2 ** (count - 1) - 1} cuts; "
            f"the exhaustive limit is {BRUTE_FORCE_LIMIT} vertices"
        )
    scale = math.lcm(*(w.denominator for w in graph.weights.values())) \
        if graph.weights else 1
    edges = [
        (1 << i, 1 << j, int(w * scale))
        for (i, j), w in sorted(graph.weights.items())
    ]
    best_weight: int | None = None
    best_size = 0
    best_mask = 0
    full = (1 << (count - 1)) - 1
    for mask in range(full + 1):
        if mask == full:
            continue
        side_mask = (mask << 1) | 1
        w = 0
        for bi, bj, wi in edges:
            if bool(side_mask & bi) != bool(side_mask & bj):
                w += wi
        if best_weight is not None:
            if w > best_weight:
                continue
            if w == best_weight:
                size = side_mask.bit_count()
                if size > best_size:
                    continue
                if size == best_size and _mask_indices(side_mask) >= \
                        _mask_indices(best_mask):
                    continue
        best_weight = w
        best_mask = side_mask
        best_size = side_mask.bit_count()
    assert best_weight is not None
    return Cut(_mask_indices(best_mask), Fraction(best_weight, scale))


def _mask_indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)
