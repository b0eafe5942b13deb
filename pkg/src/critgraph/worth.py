"""Worth of vertex sets, the maximum worth beta, subdefect and the
sequence bound on the defect of alpha-critical graphs.

The worth of ``S`` is ``a(S) - ||S||`` where ``||S||`` counts edges inside
``S``.  Maximum worth is computed exactly through stable sets: replacing an
edge by a path of length 3 with two weight-1 inner vertices raises the
maximum worth by exactly one, and once every edge has an end of weight 1 the
maximum worth equals the stability number (drop weight-1 ends of internal
edges one at a time; the worth never decreases).
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .config import LIMITS, check_cap
from .errors import InconsistencyError, PreconditionError
from .graph import VertexSet, WeightedGraph, bits, popcount
from .stability import (
    StableSetSolver,
    is_alpha_critical,
    max_stable_set_with,
    solver_for,
    stability_number,
)


def _residual_beta(adj: Sequence[int], weights: dict[int, int]) -> int:
    """Maximum worth of the graph induced on ``weights`` keys with those weights."""
    verts = sorted(weights)
    if not verts:
        return 0
    local = {v: k for k, v in enumerate(verts)}
    w = [weights[v] for v in verts]
    new_adj = [0] * len(verts)
    heavy = 0
    for v in verts:
        for u in bits(adj[v]):
            if u in local and u > v:
                a, b = local[v], local[u]
                if w[a] >= 2 and w[b] >= 2:
                    x, y = len(w), len(w) + 1
                    w += [1, 1]
                    new_adj += [0, 0]
                    for p, q in ((a, x), (x, y), (y, b)):
                        new_adj[p] |= 1 << q
                        new_adj[q] |= 1 << p
                    heavy += 1
                else:
                    new_adj[a] |= 1 << b
                    new_adj[b] |= 1 << a
    solver = StableSetSolver(new_adj, w)
    return solver.best((1 << len(w)) - 1) - heavy


class WorthSolver:
    """Maximum worth over subsets of ``cand`` given already chosen vertices."""

    def __init__(self, g: WeightedGraph):
        self.g = g
        self._cache: dict[tuple[tuple[int, int], ...], int] = {}

    def best(self, cand: int, chosen: int = 0) -> int:
        g = self.g
        residual = {}
        for r in bits(cand):
            x = g.weights[r] - popcount(g.adj[r] & chosen)
            if x > 0:
                residual[r] = x
        key = tuple(sorted(residual.items()))
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        mask = sum(1 << r for r in residual)
        # unpenalised and every internal edge has a weight-1 end: plain stability
        light = all(
            residual[r] == g.weights[r]
            and (residual[r] == 1 or not any(residual[u] >= 2 for u in bits(g.adj[r] & mask)))
            for r in residual
        )
        if light:
            val = solver_for(g).best(mask)
        else:
            val = _residual_beta(g.adj, residual)
        self._cache[key] = val
        return val

    def enumerate_optimal(self, target: int | None = None) -> Iterator[int]:
        """Masks of all sets of worth ``target`` (default: maximum), increasing."""
        g = self.g
        if target is None:
            target = self.best(g.full_mask)

        def rec(cand: int, chosen: int, value: int) -> Iterator[int]:
            if value + self.best(cand, chosen) < target:
                return
            if cand == 0:
                yield chosen
                return
            v = cand.bit_length() - 1
            rest = cand & ~(1 << v)
            yield from rec(rest, chosen, value)
            gain = g.weights[v] - popcount(g.adj[v] & chosen)
            yield from rec(rest, chosen | 1 << v, value + gain)

        yield from rec(g.full_mask, 0, 0)


@lru_cache(maxsize=256)
def worth_solver_for(g: WeightedGraph) -> WorthSolver:
    return WorthSolver(g)


def max_worth(g: WeightedGraph) -> int:
    """beta(G, a), the maximum of a(S) - ||S|| over all vertex subsets."""
    if all(g.weights[i] == 1 or g.weights[j] == 1 for i, j in g.edges):
        return stability_number(g)
    return worth_solver_for(g).best(g.full_mask)


def maximum_worth_sets(g: WeightedGraph) -> list[int]:
    check_cap(g.n, LIMITS.enumerate_max_n, "worth set enumeration")
    return list(worth_solver_for(g).enumerate_optimal(max_worth(g)))


@dataclass(frozen=True)
class WorthReport:
    beta: int
    max_worth_sets: tuple[VertexSet, ...] | None
    subdefect: int


def beta(g: WeightedGraph, enumerate_sets: bool = True) -> WorthReport:
    value = max_worth(g)
    sets = None
    if enumerate_sets:
        sets = tuple(g.vertex_set(m) for m in maximum_worth_sets(g))
    return WorthReport(beta=value, max_worth_sets=sets, subdefect=g.total_weight - 2 * value)


def subdefect(g: WeightedGraph) -> int:
    return g.total_weight - 2 * max_worth(g)


@dataclass(frozen=True)
class WorthSequenceBound:
    sequence: tuple[VertexSet, ...]
    x_sets: tuple[VertexSet, ...]
    """X_3, ..., X_k in order."""
    bound: int
    defect: int


def _as_mask(g: WeightedGraph, s: VertexSet | int | Iterable[str]) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    return g.mask_from_ids(s)


def x_sets(masks: Sequence[int]) -> list[int]:
    """``X_j = ((T_1 | ... | T_{j-1}) & T_j) | ((T_1 & ... & T_{j-1}) - T_j)`` for j >= 3."""
    out = []
    union = masks[0] | masks[1]
    inter = masks[0] & masks[1]
    for t in masks[2:]:
        out.append((union & t) | (inter & ~t))
        union |= t
        inter &= t
    return out


def sequence_bound(
    g: WeightedGraph,
    sets: Sequence[VertexSet | int | Iterable[str]],
    check_critical: bool = True,
) -> WorthSequenceBound:
    """Evaluate ``sum ||T_i|| - sum_{j>=3} ||X_j||`` for a covering sequence of
    maximum worth sets of a unit-weight alpha-critical graph.

    The bound never exceeds the defect; a violation raises
    :class:`InconsistencyError`.
    """
    if not g.is_unit():
        raise PreconditionError("the sequence bound is stated for unit weights only")
    if len(sets) < 2:
        raise PreconditionError("need at least two sets")
    if check_critical and not is_alpha_critical(g):
        raise PreconditionError("graph is not alpha-critical")
    masks = [_as_mask(g, s) for s in sets]
    best = max_worth(g)
    for k, m in enumerate(masks, start=1):
        if m & ~g.full_mask or g.worth(m) != best:
            raise PreconditionError(f"set T_{k} is not a maximum worth set")
    union = 0
    inter = g.full_mask
    for m in masks:
        union |= m
        inter &= m
    if union != g.full_mask or inter != 0:
        missing = bits(~union & g.full_mask) + bits(inter)
        raise PreconditionError(
            f"coverage fails at vertices {[g.ids[i] for i in missing]}"
        )
    xs = x_sets(masks)
    bound = sum(g.induced_edges(m) for m in masks) - sum(g.induced_edges(x) for x in xs)
    d = g.total_weight - 2 * stability_number(g)
    if bound > d:
        raise InconsistencyError(f"sequence bound {bound} exceeds defect {d}")
    return WorthSequenceBound(
        sequence=tuple(g.vertex_set(m) for m in masks),
        x_sets=tuple(g.vertex_set(x) for x in xs),
        bound=bound,
        defect=d,
    )


def worth_set_pool(g: WeightedGraph, rng: random.Random | None = None) -> list[int]:
    """Maximum worth sets of a unit-weight alpha-critical graph used to build
    covering sequences: for every vertex a maximum stable set containing it
    and one avoiding it, and for every edge ``e`` a maximum stable set ``T_e``
    of ``G - e`` (worth ``alpha``) together with ``T_e`` minus either end."""
    if not g.is_unit():
        raise PreconditionError("expects unit weights")
    pool: set[int] = set()

    def order() -> list[int] | None:
        if rng is None:
            return None
        o = list(range(g.n))
        rng.shuffle(o)
        return o

    for v in range(g.n):
        for kw in ({"include": 1 << v}, {"exclude": 1 << v}):
            t = max_stable_set_with(g, order=order(), **kw)
            if t is not None:
                pool.add(t)
    for e in g.edges:
        h = g.delete_edge(e)
        t = solver_for(h).greedy_optimal(h.full_mask, order())
        if t >> e[0] & 1 and t >> e[1] & 1:
            pool |= {t, t & ~(1 << e[0]), t & ~(1 << e[1])}
    best = max_worth(g)
    return sorted(m for m in pool if g.worth(m) == best)


def random_covering_sequence(g: WeightedGraph, rng: random.Random, length: int | None = None,
                             pool: Sequence[int] | None = None) -> list[int]:
    """A random sequence of maximum worth sets whose union is ``V`` and whose
    intersection is empty, in random order."""
    if pool is None:
        pool = worth_set_pool(g, rng)
    if length is None:
        length = rng.randint(2, 6)
    seq = [rng.choice(pool) for _ in range(length)]
    while True:
        union = inter = None
        for m in seq:
            union = m if union is None else union | m
            inter = m if inter is None else inter & m
        missing = g.full_mask & ~union
        if missing:
            v = bits(missing)[0]
            seq.append(rng.choice([m for m in pool if m >> v & 1]))
        elif inter:
            v = bits(inter)[0]
            seq.append(rng.choice([m for m in pool if not m >> v & 1]))
        else:
            break
    rng.shuffle(seq)
    return seq
