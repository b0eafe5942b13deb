"""Coloured digraphs built from degree-3 vertices of alpha-critical graphs,
admissible acyclic tournaments, and blow-ups of digraphs."""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal

from .errors import InconsistencyError, PreconditionError
from .graph import WeightedGraph, bits, connected
from .stability import defect, is_alpha_critical, solver_for, split_vertex
from .transforms import unit_odd_subdivision

Color = Literal["red", "blue", "black"]


@dataclass(frozen=True)
class ColoredDigraph:
    """Digraph with coloured arcs and a partition of its vertices into groups."""

    vertices: tuple[str, ...]
    arcs: Mapping[tuple[int, int], Color]
    groups: tuple[tuple[int, ...], ...] = ()
    hubs: tuple[str, ...] = ()
    """For digraphs built from a graph: the degree-3 vertex owning each group."""
    chosen_sets: tuple[tuple[str, ...], ...] = ()
    """For digraphs built from a graph: the stable set picked for each vertex."""

    @property
    def n(self) -> int:
        return len(self.vertices)

    def group_of(self) -> list[int]:
        out = list(range(self.n))
        for gi, grp in enumerate(self.groups):
            for v in grp:
                out[v] = self.n + gi
        return out

    def out_masks(self, color: Color | None = None) -> list[int]:
        masks = [0] * self.n
        for (u, v), c in self.arcs.items():
            if color is None or c == color:
                masks[u] |= 1 << v
        return masks

    def part(self, color: Color) -> "ColoredDigraph":
        return ColoredDigraph(
            self.vertices,
            {a: c for a, c in self.arcs.items() if c == color},
            self.groups,
            self.hubs,
            self.chosen_sets,
        )

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "groups": [[self.vertices[v] for v in grp] for grp in self.groups],
            "hubs": list(self.hubs),
            "chosen_sets": [list(s) for s in self.chosen_sets],
            "arcs": [
                [self.vertices[u], self.vertices[v], c]
                for (u, v), c in sorted(self.arcs.items())
            ],
        }

    def to_dot(self, name: str = "D") -> str:
        lines = [f'digraph "{name}" {{']
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for (u, v), c in sorted(self.arcs.items()):
            lines.append(f'  "{self.vertices[u]}" -> "{self.vertices[v]}" [color={c}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- normalisation -----------------------------------------------------


def normalize_for_dg(g: WeightedGraph, check: bool = True) -> WeightedGraph:
    """Split vertices of degree >= 4, then subdivide edges between degree-3 vertices.

    The split of ``v`` puts its two lowest-index neighbours in the first part.
    The result has maximum degree 3, no two adjacent degree-3 vertices and the
    defect of the input.
    """
    if not g.is_unit():
        raise PreconditionError("normalisation expects unit weights")
    if not connected(g):
        raise PreconditionError("graph is disconnected")
    if check and not is_alpha_critical(g):
        raise PreconditionError("graph is not alpha-critical")
    if max(g.degrees(), default=0) < 3:
        raise PreconditionError("graph has no vertex of degree at least 3")
    start_defect = defect(g)
    while True:
        big = [i for i, d in enumerate(g.degrees()) if d >= 4]
        if not big:
            break
        i = big[0]
        nbrs = [g.ids[j] for j in g.neighbors(i)]
        g = split_vertex(g, g.ids[i], nbrs[:2], nbrs[2:])
    deg = g.degrees()
    joined = {(g.ids[i], g.ids[j]): 3 for i, j in g.edges if deg[i] == 3 and deg[j] == 3}
    if joined:
        g = unit_odd_subdivision(g, joined)
    if defect(g) != start_defect:
        raise InconsistencyError("normalisation changed the defect")
    if check and not is_alpha_critical(g):
        raise InconsistencyError("normalisation destroyed alpha-criticality")
    return g


def _check_normal(g: WeightedGraph) -> list[int]:
    if not g.is_unit():
        raise PreconditionError("expected unit weights")
    deg = g.degrees()
    if max(deg, default=0) != 3:
        raise PreconditionError("expected maximum degree exactly 3")
    hubs = [i for i, d in enumerate(deg) if d == 3]
    for i in hubs:
        if any(deg[j] == 3 for j in g.neighbors(i)):
            raise PreconditionError("degree-3 vertices must be pairwise non-adjacent")
    return hubs


# -- the coloured digraph ---------------------------------------------


def _stable_set_without_edge(g: WeightedGraph, e: tuple[int, int], rng: random.Random | None) -> int:
    h = g.delete_edge(e)
    solver = solver_for(h)
    order = None
    if rng is not None:
        order = list(range(h.n))
        rng.shuffle(order)
    t = solver.greedy_optimal(h.full_mask, order)
    if not (t >> e[0] & 1 and t >> e[1] & 1):
        raise InconsistencyError(
            f"maximum stable set of G - {g.edge_label(e)} misses an end; G is not alpha-critical"
        )
    return t


def build_dg(g: WeightedGraph, rng: random.Random | None = None) -> ColoredDigraph:
    """Coloured digraph on the edges at degree-3 vertices.

    For each degree-3 vertex ``v_i`` with incident edges ``e_{i,1..3}``
    (increasing edge order) a maximum stable set ``T_{i,j}`` of ``G - e_{i,j}``
    is fixed: the lexicographically least one, or a random one when ``rng``
    is given.  There is an arc from ``e_{i,j}`` to each of ``e_{k,1..3}``
    (``k != i``), red when ``v_k`` lies in both ``T_{i,j+1}`` and ``T_{i,j+2}``,
    blue when it lies in neither (indices mod 3).
    """
    hubs = _check_normal(g)
    inc = [sorted((min(i, j), max(i, j)) for j in g.neighbors(i)) for i in hubs]
    labels = [g.edge_label(e) for edges in inc for e in edges]
    groups = tuple(tuple(range(3 * p, 3 * p + 3)) for p in range(len(hubs)))
    tsets = [[_stable_set_without_edge(g, e, rng) for e in edges] for edges in inc]
    arcs: dict[tuple[int, int], Color] = {}
    for i in range(len(hubs)):
        for k in range(len(hubs)):
            if i == k:
                continue
            vk = hubs[k]
            for j in range(3):
                a = tsets[i][(j + 1) % 3] >> vk & 1
                b = tsets[i][(j + 2) % 3] >> vk & 1
                if a and b:
                    color: Color | None = "red"
                elif not a and not b:
                    color = "blue"
                else:
                    color = None
                if color:
                    for l in range(3):
                        arcs[(3 * i + j, 3 * k + l)] = color
    chosen = tuple(
        tuple(g.ids[v] for v in bits(t)) for row in tsets for t in row
    )
    return ColoredDigraph(tuple(labels), arcs, groups, tuple(g.ids[i] for i in hubs), chosen)


# -- acyclic tournaments ----------------------------------------------


def _max_tournament(out: Sequence[int], group_mask: Sequence[int], cand: int,
                    stop_at: int | None = None) -> list[int]:
    """Longest sequence of vertices in ``cand`` with an arc from each to every
    later one, at most one vertex per group."""
    memo: dict[int, list[int]] = {}

    def groups_in(mask: int) -> int:
        seen = 0
        count = 0
        for v in bits(mask):
            if not seen & group_mask[v]:
                seen |= group_mask[v]
                count += 1
        return count

    def rec(cand: int) -> list[int]:
        if cand in memo:
            return memo[cand]
        best: list[int] = []
        limit = groups_in(cand)
        for v in bits(cand):
            if len(best) >= limit:
                break
            tail = rec(out[v] & cand & ~group_mask[v])
            if 1 + len(tail) > len(best):
                best = [v] + tail
                if stop_at is not None and len(best) >= stop_at:
                    break
        memo[cand] = best
        return best

    return rec(cand)


def _group_masks(d: ColoredDigraph) -> list[int]:
    masks = [1 << v for v in range(d.n)]
    for grp in d.groups:
        m = 0
        for v in grp:
            m |= 1 << v
        for v in grp:
            masks[v] = m
    return masks


def max_acyclic_tournament(d: ColoredDigraph, color: Color | None = None,
                           admissible: bool = True) -> list[str]:
    """Vertices of a largest acyclic tournament, listed from source to sink."""
    out = d.out_masks(color)
    gm = _group_masks(d) if admissible else [1 << v for v in range(d.n)]
    seq = _max_tournament(out, gm, (1 << d.n) - 1)
    return [d.vertices[v] for v in seq]


def max_mono_admissible_tournament(d: ColoredDigraph) -> tuple[int, list[str], Color | None]:
    """Largest red-only or blue-only admissible acyclic tournament."""
    best: tuple[int, list[str], Color | None] = (0, [], None)
    for color in ("red", "blue"):
        seq = max_acyclic_tournament(d, color)
        if len(seq) > best[0]:
            best = (len(seq), seq, color)
    return best


# -- R, B and blow-ups -------------------------------------------------


def hub_digraphs(d: ColoredDigraph) -> tuple[ColoredDigraph, ColoredDigraph]:
    """Digraphs ``R`` and ``B`` on the hubs: ``v_i -> v_k`` in ``R`` when ``v_k``
    lies in at least two of the three chosen sets of ``v_i``, in ``B`` otherwise."""
    p = len(d.hubs)
    red: dict[tuple[int, int], Color] = {}
    blue: dict[tuple[int, int], Color] = {}
    for i in range(p):
        sets = [set(d.chosen_sets[3 * i + j]) for j in range(3)]
        for k in range(p):
            if i == k:
                continue
            hits = sum(d.hubs[k] in s for s in sets)
            if hits >= 2:
                red[(i, k)] = "red"
            else:
                blue[(i, k)] = "blue"
    return ColoredDigraph(d.hubs, red), ColoredDigraph(d.hubs, blue)


def fan_subsets(d: ColoredDigraph, color: Color) -> dict[tuple[int, int], frozenset[int]]:
    """For each pair of groups ``(i, k)``, the slots ``j`` whose vertex sends
    ``color`` arcs into group ``k`` (slots numbered 1..3)."""
    out: dict[tuple[int, int], set[int]] = {}
    for (u, v), c in d.arcs.items():
        if c == color:
            out.setdefault((u // 3, v // 3), set()).add(u % 3 + 1)
    return {k: frozenset(s) for k, s in out.items()}


@dataclass(frozen=True)
class BlowUp:
    base: ColoredDigraph
    arc_subsets: Mapping[tuple[int, int], frozenset[int]]
    result: ColoredDigraph = field(repr=False)


def blow_up(d: ColoredDigraph, arc_subsets: Mapping[tuple[int, int], Iterable[int]]) -> BlowUp:
    """Three copies ``v_1, v_2, v_3`` per vertex; for each arc ``(v, w)`` and each
    ``i`` in its subset, arcs from ``v_i`` to all three copies of ``w``."""
    subsets = {}
    for arc in d.arcs:
        s = frozenset(arc_subsets.get(arc, ()))
        if not s:
            raise PreconditionError(f"arc {arc} needs a nonempty index subset")
        if not s <= {1, 2, 3}:
            raise PreconditionError(f"arc {arc} has indices outside 1..3")
        subsets[arc] = s
    extra = set(arc_subsets) - set(d.arcs)
    if extra:
        raise PreconditionError(f"subsets given for non-arcs {sorted(extra)}")
    verts = tuple(f"{v}_{i}" for v in d.vertices for i in (1, 2, 3))
    arcs: dict[tuple[int, int], Color] = {}
    for (v, w), s in subsets.items():
        for i in s:
            for l in (1, 2, 3):
                arcs[(3 * v + i - 1, 3 * w + l - 1)] = d.arcs[(v, w)]
    groups = tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(d.n))
    return BlowUp(d, subsets, ColoredDigraph(verts, arcs, groups))


def transitive_tournament(k: int) -> ColoredDigraph:
    return ColoredDigraph(
        tuple(f"t{i}" for i in range(k)),
        {(i, j): "black" for i in range(k) for j in range(i + 1, k)},
    )


def has_admissible_tournament(d: ColoredDigraph, k: int) -> bool:
    out = d.out_masks()
    gm = _group_masks(d)
    return len(_max_tournament(out, gm, (1 << d.n) - 1, stop_at=k)) >= k


def blowup_out_masks(n: int, arcs: Sequence[tuple[int, int]], subsets: Sequence[Iterable[int]]) -> list[int]:
    """Out-neighbour masks of a blow-up; a lean path for exhaustive sweeps."""
    out = [0] * (3 * n)
    for (v, w), s in zip(arcs, subsets):
        target = 0b111 << (3 * w)
        for i in s:
            out[3 * v + i - 1] |= target
    return out


def admissible_order_at_least(out: Sequence[int], k: int) -> bool:
    n3 = len(out)
    gm = [0b111 << (3 * (v // 3)) for v in range(n3)]
    return len(_max_tournament(out, gm, (1 << n3) - 1, stop_at=k)) >= k


def a_sequence(k: int) -> int:
    """``a_1 = 1`` and ``a_k = 3 a_{k-1} + 1``."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    a = 1
    for _ in range(k - 1):
        a = 3 * a + 1
    return a
