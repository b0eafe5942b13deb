"""Weighted stability number, maximum stable sets, edge strengths and criticality."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .config import LIMITS, check_cap
from .graph import (
    GraphError,
    VertexSet,
    WeightedGraph,
    bits,
    component_masks,
    connected,
    popcount,
)


class StableSetSolver:
    """Exact maximum-weight stable set on induced subgraphs of one graph.

    ``best(mask)`` is memoised per vertex mask.  The search splits into
    connected components, applies the pendant-vertex reduction, branches on
    a vertex of maximum degree and skips the exclusion branch when the
    residual weight cannot beat the inclusion branch.
    """

    def __init__(self, adj: Sequence[int], weights: Sequence[int]):
        self.adj = tuple(adj)
        self.w = tuple(weights)
        self._cache: dict[int, int] = {0: 0}

    def _weight(self, mask: int) -> int:
        return sum(self.w[i] for i in bits(mask))

    def best(self, cand: int) -> int:
        cached = self._cache.get(cand)
        if cached is not None:
            return cached
        comps = component_masks(self.adj, cand)
        if len(comps) > 1:
            val = sum(self.best(c) for c in comps)
        else:
            val = self._best_connected(cand)
        self._cache[cand] = val
        return val

    def _best_connected(self, cand: int) -> int:
        adj, w = self.adj, self.w
        members = bits(cand)
        if len(members) == 1:
            return w[members[0]]
        top, top_deg = -1, -1
        for v in members:
            d = popcount(adj[v] & cand)
            if d == 1:
                u = (adj[v] & cand).bit_length() - 1
                if w[v] >= w[u]:
                    return w[v] + self.best(cand & ~(1 << v) & ~(1 << u))
            if d > top_deg:
                top, top_deg = v, d
        v = top
        include = w[v] + self.best(cand & ~(1 << v) & ~adj[v])
        rest = cand & ~(1 << v)
        if self._weight(rest) <= include:
            return include
        return max(include, self.best(rest))

    def enumerate_optimal(self, cand: int, target: int | None = None) -> Iterator[int]:
        """All stable sets inside ``cand`` of weight ``target`` (default: optimum),
        as masks in increasing integer order."""
        if target is None:
            target = self.best(cand)
        adj, w = self.adj, self.w

        def rec(cand: int, chosen: int, value: int) -> Iterator[int]:
            if value + self.best(cand) < target:
                return
            if cand == 0:
                yield chosen
                return
            v = cand.bit_length() - 1
            yield from rec(cand & ~(1 << v), chosen, value)
            yield from rec(cand & ~(1 << v) & ~adj[v], chosen | 1 << v, value + w[v])

        yield from rec(cand, 0, 0)

    def greedy_optimal(self, cand: int, order: Sequence[int] | None = None) -> int:
        """A maximum stable set within ``cand``: scan ``order`` and keep every
        vertex that can still be completed to an optimum.  With the default
        ascending order this is the lexicographically least optimum."""
        target = self.best(cand)
        order = range(len(self.w)) if order is None else order
        chosen, value = 0, 0
        for v in order:
            if not cand >> v & 1:
                continue
            rest = cand & ~(1 << v) & ~self.adj[v]
            if value + self.w[v] + self.best(rest) == target:
                chosen |= 1 << v
                value += self.w[v]
                cand = rest
            else:
                cand &= ~(1 << v)
        return chosen


@lru_cache(maxsize=512)
def solver_for(g: WeightedGraph) -> StableSetSolver:
    return StableSetSolver(g.adj, g.weights)


@dataclass(frozen=True)
class StabilityReport:
    alpha: int
    max_stable_sets: tuple[VertexSet, ...] | None
    defect: int


@dataclass(frozen=True)
class StrengthMap:
    strengths: dict[tuple[str, str], int]

    def __getitem__(self, edge: tuple[str, str]) -> int:
        if edge in self.strengths:
            return self.strengths[edge]
        return self.strengths[(edge[1], edge[0])]

    def values(self) -> list[int]:
        return list(self.strengths.values())

    @property
    def minimum(self) -> int | None:
        return min(self.strengths.values(), default=None)

    @property
    def maximum(self) -> int | None:
        return max(self.strengths.values(), default=None)


def stability_number(g: WeightedGraph) -> int:
    check_cap(g.n, LIMITS.alpha_max_n, "stability number")
    return solver_for(g).best(g.full_mask)


def maximum_stable_sets(g: WeightedGraph) -> list[int]:
    """Masks of all maximum-weight stable sets, increasing."""
    check_cap(g.n, LIMITS.enumerate_max_n, "stable set enumeration")
    return list(solver_for(g).enumerate_optimal(g.full_mask))


def alpha(g: WeightedGraph, enumerate_sets: bool = True) -> StabilityReport:
    """Stability number, defect and (optionally) every maximum-weight stable set."""
    value = stability_number(g)
    sets = None
    if enumerate_sets:
        sets = tuple(g.vertex_set(m) for m in maximum_stable_sets(g))
    return StabilityReport(alpha=value, max_stable_sets=sets, defect=g.total_weight - 2 * value)


def defect(g: WeightedGraph) -> int:
    return g.total_weight - 2 * stability_number(g)


def edge_strength(g: WeightedGraph, e: tuple[int, int]) -> int:
    return stability_number(g.delete_edge(e)) - stability_number(g)


def strength(g: WeightedGraph) -> StrengthMap:
    """Strength ``alpha(G - e) - alpha(G)`` of every edge."""
    base = stability_number(g)
    out = {}
    for e in g.edges:
        h = g.delete_edge(e)
        out[(g.ids[e[0]], g.ids[e[1]])] = StableSetSolver(h.adj, h.weights).best(h.full_mask) - base
    return StrengthMap(out)


def lex_least_max_stable_set(g: WeightedGraph) -> int:
    return solver_for(g).greedy_optimal(g.full_mask)


def random_max_stable_set(g: WeightedGraph, rng: random.Random) -> int:
    order = list(range(g.n))
    rng.shuffle(order)
    return solver_for(g).greedy_optimal(g.full_mask, order)


def max_stable_set_with(g: WeightedGraph, include: int = 0, exclude: int = 0,
                        order: Sequence[int] | None = None) -> int | None:
    """A maximum stable set of ``g`` containing ``include`` and missing
    ``exclude``, or ``None`` if no maximum stable set does."""
    solver = solver_for(g)
    if not g.is_stable(include):
        return None
    cand = g.full_mask & ~exclude & ~include
    for v in bits(include):
        cand &= ~g.adj[v]
    target = solver.best(g.full_mask)
    if g.weight_of(include) + solver.best(cand) != target:
        return None
    return include | solver.greedy_optimal(cand, order)


def _require_three(g: WeightedGraph) -> None:
    if g.n < 3:
        raise GraphError("criticality is defined for graphs with at least three vertices")


def is_critical_weighted(g: WeightedGraph) -> bool:
    """True iff deleting any edge strictly raises the weighted stability number."""
    _require_three(g)
    base = stability_number(g)
    for e in g.edges:
        if stability_number(g.delete_edge(e)) <= base:
            return False
    return True


def is_alpha_critical(g: WeightedGraph, require_connected: bool = False) -> bool:
    """Unweighted alpha-criticality (every edge has strength 1)."""
    if not g.is_unit():
        raise GraphError("is_alpha_critical expects unit weights; use is_critical_weighted")
    if require_connected and not connected(g):
        return False
    return is_critical_weighted(g)


def split_vertex(g: WeightedGraph, v: str, n1: Sequence[str], n2: Sequence[str]) -> WeightedGraph:
    """Replace ``v`` by a path ``v1 - v' - v2`` with ``v1`` joined to ``n1`` and
    ``v2`` joined to ``n2``.  New ids are ``<v>.1``, ``<v>.2`` and ``<v>.0``."""
    if not g.is_unit():
        raise GraphError("split_vertex is defined for unit weights only")
    if v not in g.index:
        raise GraphError(f"unknown vertex {v!r}")
    i = g.index[v]
    if g.degree(i) < 4:
        raise GraphError(f"vertex {v!r} has degree {g.degree(i)} < 4 and cannot be split")
    nbrs = {g.ids[j] for j in g.neighbors(i)}
    s1, s2 = set(n1), set(n2)
    if s1 & s2 or s1 | s2 != nbrs or len(s1) != len(n1) or len(s2) != len(n2):
        raise GraphError("n1 and n2 must partition the neighbours of the split vertex")
    if len(s1) < 2 or len(s2) < 2:
        raise GraphError("both parts of the split need at least two neighbours")
    v1, v2, vp = f"{v}.1", f"{v}.2", f"{v}.0"
    ids = [u for u in g.ids if u != v] + [v1, v2, vp]
    clash = {v1, v2, vp} & set(g.ids)
    if clash:
        raise GraphError(f"split would reuse existing ids {sorted(clash)}")
    edges = [(a, b) for a, b in g.edge_ids() if v not in (a, b)]
    edges += [(v1, u) for u in n1] + [(v2, u) for u in n2] + [(v1, vp), (v2, vp)]
    return WeightedGraph.from_edges(ids, edges)
