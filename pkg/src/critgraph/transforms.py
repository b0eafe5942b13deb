"""Odd subdivisions, shrinking, and the passage between facet-defining graphs
and 1-critical facet-graphs."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Literal

from .canon import isomorphic
from .errors import InconsistencyError, PreconditionError
from .graph import GraphError, WeightedGraph, remote_edges
from .polytopes import is_fdg, is_one_cfg
from .stability import defect, strength
from .worth import subdefect


@dataclass(frozen=True)
class SubdivisionPlan:
    """Odd path length per edge (given as id pairs) and the weight rule for new vertices."""

    targets: Mapping[tuple[str, str], int]
    weight_rule: Literal["unit", "strength"] = "unit"

    def __post_init__(self) -> None:
        for e, length in self.targets.items():
            if length < 3 or length % 2 == 0:
                raise PreconditionError(f"path length for {e} must be odd and at least 3, got {length}")


def _replace_edges(
    g: WeightedGraph,
    lengths: Mapping[tuple[int, int], int],
    inner_weight: Mapping[tuple[int, int], int],
) -> WeightedGraph:
    ids = list(g.ids)
    weights = list(g.weights)
    taken = set(ids)
    edges = []
    for e in g.edges:
        if e not in lengths:
            edges.append((ids[e[0]], ids[e[1]]))
            continue
        label = g.edge_label(e)
        chain = [g.ids[e[0]]]
        for k in range(1, lengths[e]):
            vid = f"{label}#{k}"
            if vid in taken:
                raise GraphError(f"fresh vertex id {vid!r} already in use")
            taken.add(vid)
            ids.append(vid)
            weights.append(inner_weight[e])
            chain.append(vid)
        chain.append(g.ids[e[1]])
        edges.extend(zip(chain, chain[1:]))
    return WeightedGraph.from_edges(ids, edges, weights)


def _edge_keys(g: WeightedGraph, edges: Iterable[tuple[str, str]]) -> list[tuple[int, int]]:
    return [g.edge_index(u, v) for u, v in edges]


def elementary_odd_subdivision(g: WeightedGraph, edges: Iterable[tuple[str, str]]) -> WeightedGraph:
    """Replace each selected edge ``uv`` by ``u - x - y - v`` with ``a(x) = a(y) = s(uv)``."""
    keys = _edge_keys(g, edges)
    if not keys:
        return g
    s = strength(g)
    inner = {}
    for e in keys:
        val = s[(g.ids[e[0]], g.ids[e[1]])]
        if val < 1:
            raise PreconditionError(f"edge {g.edge_label(e)} has strength {val}; weights must be positive")
        inner[e] = val
    return _replace_edges(g, {e: 3 for e in keys}, inner)


def unit_odd_subdivision(g: WeightedGraph, plan: SubdivisionPlan | Mapping[tuple[str, str], int]) -> WeightedGraph:
    """Replace targeted edges by odd paths whose inner vertices have weight 1."""
    if not isinstance(plan, SubdivisionPlan):
        plan = SubdivisionPlan(dict(plan), "unit")
    if plan.weight_rule != "unit":
        raise PreconditionError("unit_odd_subdivision takes a plan with the unit weight rule")
    lengths = {g.edge_index(u, v): n for (u, v), n in plan.targets.items()}
    return _replace_edges(g, lengths, {e: 1 for e in lengths})


def subdivide_all(g: WeightedGraph, length: int = 3) -> WeightedGraph:
    return unit_odd_subdivision(g, {e: length for e in g.edge_ids()})


def _outer_neighbour(g: WeightedGraph, x: int, avoid: int) -> int:
    (other,) = [y for y in g.neighbors(x) if y != avoid]
    return other


def shrink_once(g: WeightedGraph, u: str, v: str) -> WeightedGraph:
    """Contract the induced path ``u' u v v'`` to the edge ``u' v'`` (inverse of a
    unit subdivision of length 3)."""
    i, j = g.edge_index(u, v)
    if g.index[u] != i:
        i, j = j, i
    for x, name in ((i, u), (j, v)):
        if g.degree(x) != 2:
            raise PreconditionError(f"{name!r} has degree {g.degree(x)}, shrinking needs degree 2")
        if g.weights[x] != 1:
            raise PreconditionError(f"{name!r} has weight {g.weights[x]}, shrinking needs weight 1")
    up, vp = _outer_neighbour(g, i, j), _outer_neighbour(g, j, i)
    if up == vp:
        raise PreconditionError(f"{u!r} and {v!r} have the same outer neighbour {g.ids[up]!r}")
    if g.has_edge(up, vp):
        raise PreconditionError(f"outer neighbours {g.ids[up]!r} and {g.ids[vp]!r} are adjacent")
    ids = [x for x in g.ids if x not in (u, v)]
    weights = [w for x, w in zip(g.ids, g.weights) if x not in (u, v)]
    edges = [(a, b) for a, b in g.edge_ids() if a not in (u, v) and b not in (u, v)]
    edges.append((g.ids[up], g.ids[vp]))
    return WeightedGraph.from_edges(ids, edges, weights)


def shrinkable(g: WeightedGraph, u: str, v: str) -> bool:
    try:
        shrink_once(g, u, v)
    except PreconditionError:
        return False
    return True


def _require_fdg(g: WeightedGraph, oracle: bool | None) -> None:
    if not is_fdg(g, oracle=oracle).is_fdg:
        raise PreconditionError("input is not a facet-defining graph")


def to_one_cfg(g: WeightedGraph, oracle: bool | None = False, verify: bool = True) -> WeightedGraph:
    """Subdivide every edge into a path of length 3 with unit inner weights.

    For a facet-defining graph the result is a 1-critical facet-graph whose
    defect equals the input's subdefect; ``verify`` rechecks both facts.
    """
    _require_fdg(g, oracle)
    out = subdivide_all(g, 3)
    if verify:
        if not is_one_cfg(out):
            raise InconsistencyError("subdivided facet-defining graph is not a 1-critical facet-graph")
        if defect(out) != subdefect(g):
            raise InconsistencyError(
                f"defect {defect(out)} of the subdivision differs from subdefect {subdefect(g)}"
            )
    return out


def shrink_candidates(g: WeightedGraph) -> list[tuple[str, str]]:
    """Remote edges admitting a shrink, in increasing index order."""
    rem = sorted(remote_edges(g), key=lambda e: (g.index[e[0]], g.index[e[1]]))
    return [e for e in rem if shrinkable(g, *e)]


def shrink_to_basis(g: WeightedGraph, oracle: bool | None = False, check: bool = True) -> WeightedGraph:
    """Shrink remote edges, least index pair first, until none can be shrunk.

    In a facet-defining graph every remote edge lies on an induced path
    ``u' u v v'`` unless the graph is the triangle itself, where ``u' = v'``.
    """
    if check:
        _require_fdg(g, oracle)
    while True:
        rem = remote_edges(g)
        if not rem:
            return g
        cands = shrink_candidates(g)
        if not cands:
            if g.n == 3:
                return g
            raise InconsistencyError(
                f"remote edges {rem} remain but none sits on an induced path of weight-1 vertices"
            )
        g = shrink_once(g, *cands[0])


def unsubdivide_once(g: WeightedGraph, u: str, v: str) -> WeightedGraph:
    """Inverse of an elementary odd subdivision on the remote edge ``uv``:
    both ends have degree 2 and equal weight; the path ``u' u v v'`` becomes
    the edge ``u' v'``."""
    i, j = g.edge_index(u, v)
    for x in (i, j):
        if g.degree(x) != 2:
            raise PreconditionError(f"{g.ids[x]!r} has degree {g.degree(x)}")
    if g.weights[i] != g.weights[j]:
        raise PreconditionError("ends of the edge carry different weights")
    up, vp = _outer_neighbour(g, i, j), _outer_neighbour(g, j, i)
    if up == vp or g.has_edge(up, vp):
        raise PreconditionError("no induced path through the edge")
    ids = [x for x in g.ids if x not in (u, v)]
    weights = [w for x, w in zip(g.ids, g.weights) if x not in (u, v)]
    edges = [(a, b) for a, b in g.edge_ids() if a not in (u, v) and b not in (u, v)]
    edges.append((g.ids[up], g.ids[vp]))
    return WeightedGraph.from_edges(ids, edges, weights)


def reduce_cfg(g: WeightedGraph) -> WeightedGraph:
    """Undo elementary odd subdivisions on remote edges while one applies.

    A step is accepted only when re-subdividing the new edge reproduces the
    same weights, i.e. the new edge has strength equal to the removed weights.
    """
    while True:
        rem = sorted(remote_edges(g), key=lambda e: (g.index[e[0]], g.index[e[1]]))
        if not rem:
            return g
        for u, v in rem:
            try:
                h = unsubdivide_once(g, u, v)
            except PreconditionError:
                continue
            up = _outer_neighbour(g, g.index[u], g.index[v])
            vp = _outer_neighbour(g, g.index[v], g.index[u])
            try:
                back = elementary_odd_subdivision(h, [(g.ids[up], g.ids[vp])])
            except PreconditionError:
                continue
            if isomorphic(back, g):
                g = h
                break
        else:
            return g
