"""Isomorphism-free search for basis graphs of a fixed defect or subdefect.

Structures are grown one vertex at a time (connected graphs of bounded
degree, one representative per isomorphism class).  Weightings are then
screened in bulk with numpy tables over all vertex subsets, and the few
survivors go through the exact predicates of :mod:`critgraph.polytopes`.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .canon import canonical_form, canonical_key, isomorphic
from .config import LIMITS, check_cap
from .errors import InconsistencyError, PreconditionError
from .graph import WeightedGraph, connected, remote_edges
from .polytopes import is_cfg, is_fdg
from .stability import defect, strength
from .transforms import reduce_cfg, shrink_candidates, shrink_to_basis
from .worth import subdefect

log = logging.getLogger(__name__)

Target = Literal["cfg", "fdg"]


@dataclass(frozen=True)
class SearchSpace:
    target: Target
    defect: int
    max_vertices: int
    primitive: bool = True
    """cfg only: skip weightings with a common factor.  ``(G, k a)`` is a
    critical facet-graph of defect ``k * delta`` whenever ``(G, a)`` is one
    of defect ``delta``; it defines the same facet."""

    def __post_init__(self) -> None:
        if self.defect < 1:
            raise PreconditionError("defect must be at least 1")
        if self.target not in ("cfg", "fdg"):
            raise PreconditionError(f"unknown target {self.target!r}")

    @property
    def degree_bound(self) -> int:
        d = self.defect
        return 2 * d - 1 if d > 1 else 2 * d

    @property
    def weight_bound(self) -> int:
        return self.defect


@dataclass
class BasisMember:
    graph: WeightedGraph
    defect: int
    subdefect: int
    strengths: list[int]
    certificate: str
    """How membership was established: 'stab', 'lop-system' or 'lop-oracle'."""


@dataclass
class BasisCatalog:
    space: SearchSpace
    members: list[BasisMember] = field(default_factory=list)
    structures_examined: int = 0
    weightings_examined: int = 0

    @property
    def graphs(self) -> list[WeightedGraph]:
        return [m.graph for m in self.members]

    def count_by_order(self) -> dict[int, int]:
        return dict(sorted(Counter(m.graph.n for m in self.members).items()))

    def find(self, g: WeightedGraph) -> BasisMember | None:
        for m in self.members:
            if isomorphic(m.graph, g):
                return m
        return None

    def summary(self) -> str:
        s = self.space
        lines = [
            f"target={s.target} defect={s.defect} max_n={s.max_vertices} "
            f"degree<={s.degree_bound} weight<={s.weight_bound}",
            f"structures examined: {self.structures_examined}",
            f"weightings examined: {self.weightings_examined}",
            f"members: {len(self.members)}",
            "n  count",
        ]
        lines += [f"{n:<2} {c}" for n, c in self.count_by_order().items()]
        return "\n".join(lines)


# -- structures --------------------------------------------------------


def _from_adjacency(n: int, edges: Sequence[tuple[int, int]]) -> WeightedGraph:
    return WeightedGraph(tuple(str(i) for i in range(n)), (1,) * n, tuple(edges))


def connected_structures(max_n: int, max_degree: int | None = None) -> Iterator[WeightedGraph]:
    """Every connected simple graph with at most ``max_n`` vertices and maximum
    degree at most ``max_degree``, once per isomorphism class, in canonical form.

    Every connected graph on ``n + 1`` vertices arises from one on ``n``
    vertices by adding a vertex with a nonempty neighbourhood (delete a leaf of
    a spanning tree), and both connectivity-preserving deletion and the degree
    bound are hereditary, so growing level by level and keeping one canonical
    representative per class is complete.
    """
    if max_n < 1:
        return
    level = {canonical_key(_from_adjacency(1, [])): _from_adjacency(1, [])}
    yield from level.values()
    for n in range(1, max_n):
        nxt: dict = {}
        for g in level.values():
            deg = g.degrees()
            free = [i for i in range(n) if max_degree is None or deg[i] < max_degree]
            top = len(free) if max_degree is None else min(len(free), max_degree)
            for k in range(1, top + 1):
                for nbrs in itertools.combinations(free, k):
                    h = _from_adjacency(n + 1, g.edges + tuple((i, n) for i in nbrs))
                    key = canonical_key(h)
                    if key not in nxt:
                        nxt[key] = canonical_form(h).graph
        level = nxt
        yield from sorted(level.values(), key=lambda h: (h.m, h.edges))


# -- bulk screening of weightings ---------------------------------------


def _subset_tables(g: WeightedGraph) -> tuple[np.ndarray, np.ndarray]:
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    inc = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int16)
    inner = np.zeros(1 << n, dtype=np.int16)
    for i, j in g.edges:
        inner += (inc[:, i] & inc[:, j])
    return inc, inner


def _weightings(g: WeightedGraph, top: int) -> np.ndarray:
    return np.array(list(itertools.product(range(1, top + 1), repeat=g.n)), dtype=np.int16)


def screen_weightings(g: WeightedGraph, space: SearchSpace) -> list[tuple[int, ...]]:
    """Weightings of the structure ``g`` passing the necessary conditions:
    right (sub)defect, the degree bound ``deg(v) <= a(v) + defect``, and

    * cfg: every edge has positive strength;
    * fdg: for every edge ``uv`` all four traces ``T & {u, v}`` occur among
      maximum worth sets ``T``.
    """
    inc, inner = _subset_tables(g)
    weights = _weightings(g, space.weight_bound)
    deg = np.array(g.degrees(), dtype=np.int16)
    keep = np.all(deg[None, :] <= weights + space.defect, axis=1)
    if space.target == "cfg" and space.primitive:
        keep &= np.gcd.reduce(weights, axis=1) == 1
    weights = weights[keep]
    if weights.shape[0] == 0:
        return []
    val = weights.astype(np.int32) @ inc.T.astype(np.int32)  # a(S) for every weighting and S
    total = weights.sum(axis=1).astype(np.int32)
    stable = inner == 0
    if space.target == "cfg":
        alpha = np.where(stable[None, :], val, -1).max(axis=1)
        ok = total - 2 * alpha == space.defect
        for i, j in g.edges:
            only_e = (inner == 1) & (inc[:, i] == 1) & (inc[:, j] == 1)
            grown = np.where(only_e[None, :], val, -1).max(axis=1)
            ok &= grown > alpha
    else:
        worth = val - inner[None, :]
        beta = worth.max(axis=1)
        ok = total - 2 * beta == space.defect
        tight = worth == beta[:, None]
        for i, j in g.edges:
            for xi in (0, 1):
                for xj in (0, 1):
                    pattern = (inc[:, i] == xi) & (inc[:, j] == xj)
                    ok &= np.any(tight & pattern[None, :], axis=1)
    return [tuple(int(x) for x in row) for row in weights[ok]]


# -- irreducibility ------------------------------------------------------


def is_reduced(g: WeightedGraph, target: Target) -> bool:
    """No reduction step applies: no shrinkable remote edge (fdg) or no remote
    edge undoing an elementary odd subdivision (cfg)."""
    if not remote_edges(g):
        return True
    if target == "fdg":
        return not shrink_candidates(g)
    return reduce_cfg(g).n == g.n


def _structure_may_host(g: WeightedGraph, target: Target) -> bool:
    """Cheap structural rejections valid for every weighting."""
    deg = g.degrees()
    if g.n < 3 or min(deg) < 2:
        # min degree >= 2: a pendant vertex v with neighbour u forces
        # x_u + x_v = 1 on all tight stable sets (cfg), and contradicts the
        # four-trace property (fdg)
        return False
    if target == "fdg":
        # degree-2 vertices of facet-defining graphs have weight 1 (four-trace
        # property), so a remote edge on an induced path u'uvv' is shrinkable
        for u, v in remote_edges(g):
            i, j = g.index[u], g.index[v]
            (up,) = [x for x in g.neighbors(i) if x != j]
            (vp,) = [x for x in g.neighbors(j) if x != i]
            if up != vp and not g.has_edge(up, vp):
                return False
    return True


def _examine_structure(args: tuple[WeightedGraph, SearchSpace]) -> tuple[int, list[BasisMember]]:
    g, space = args
    if not _structure_may_host(g, space.target):
        return 0, []
    found: dict = {}
    weightings = screen_weightings(g, space)
    for w in weightings:
        h = g.with_weights(w)
        key = canonical_key(h)
        if key in found:
            continue
        member = _confirm(h, space)
        found[key] = member
    return len(weightings), [m for m in found.values() if m is not None]


def _confirm(h: WeightedGraph, space: SearchSpace) -> BasisMember | None:
    if not is_reduced(h, space.target):
        return None
    if space.target == "cfg":
        if defect(h) != space.defect or not is_cfg(h):
            return None
        how = "stab"
    else:
        if subdefect(h) != space.defect:
            return None
        decision = is_fdg(h)
        if not decision.is_fdg:
            return None
        if decision.oracle is not None and not decision.agree:
            raise InconsistencyError(f"certificate and oracle disagree on {h}")
        how = "lop-oracle" if decision.oracle is not None else "lop-system"
    canon = canonical_form(h).graph
    return BasisMember(
        graph=canon,
        defect=defect(canon),
        subdefect=subdefect(canon),
        strengths=strength(canon).values(),
        certificate=how,
    )


def enumerate_basis(space: SearchSpace, jobs: int = 1) -> BasisCatalog:
    """All reduced graphs of the target class with the given (sub)defect and at
    most ``space.max_vertices`` vertices, one per isomorphism class."""
    check_cap(space.max_vertices, LIMITS.basis_max_n, "basis enumeration")
    catalog = BasisCatalog(space)
    structures = [
        g for g in connected_structures(space.max_vertices, space.degree_bound) if g.n >= 3
    ]
    catalog.structures_examined = len(structures)
    work = [(g, space) for g in structures]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_examine_structure, work, chunksize=16))
    else:
        results = [_examine_structure(w) for w in work]
    members = []
    for count, found in results:
        catalog.weightings_examined += count
        members.extend(found)
    members.sort(key=lambda m: (m.graph.n, m.graph.m, m.graph.weights, m.graph.edges))
    catalog.members = members
    log.info("basis %s/%d up to n=%d: %d members", space.target, space.defect,
             space.max_vertices, len(members))
    return catalog


# -- reduction of samples ----------------------------------------------


@dataclass
class BasisCheck:
    sample: WeightedGraph
    reduced: WeightedGraph
    member_index: int | None

    @property
    def ok(self) -> bool:
        return self.member_index is not None


def verify_basis_property(catalog: BasisCatalog, samples: Sequence[WeightedGraph]) -> list[BasisCheck]:
    """Reduce each sample and locate the result in the catalog.

    A result outside the catalog is returned with ``member_index=None``: a
    counterexample to the catalog's completeness at its vertex cap.
    """
    space = catalog.space
    out = []
    for g in samples:
        if space.target == "fdg":
            if subdefect(g) != space.defect or not is_fdg(g, oracle=False).is_fdg:
                raise PreconditionError(f"sample {g} is not a facet-defining graph of subdefect {space.defect}")
            red = shrink_to_basis(g, check=False)
        else:
            if not connected(g) or defect(g) != space.defect or not is_cfg(g):
                raise PreconditionError(f"sample {g} is not a critical facet-graph of defect {space.defect}")
            red = reduce_cfg(g)
        idx = next((k for k, m in enumerate(catalog.members) if isomorphic(m.graph, red)), None)
        out.append(BasisCheck(g, red, idx))
    return out
