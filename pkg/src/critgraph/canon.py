"""Canonical labelling of weighted graphs.

Individualisation-refinement: the initial colouring is by (weight, degree),
refined to an equitable ordered partition; non-discrete partitions are split
by individualising each vertex of the first non-singleton cell in turn.  The
canonical labelling is the leaf whose relabelled graph has the smallest
certificate.  Colour classes are ordered by invariants only, so the set of
leaf certificates does not depend on the input labelling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import WeightedGraph, popcount

Certificate = tuple[tuple[int, ...], tuple[tuple[int, int], ...]]


@dataclass(frozen=True)
class CanonicalForm:
    graph: WeightedGraph
    mapping: dict[str, int]
    """Original vertex id -> position in the canonical graph."""

    @property
    def key(self) -> Certificate:
        return (self.graph.weights, self.graph.edges)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            new_cells: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(adj[v] & smask), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    new_cells.extend(groups[k] for k in sorted(groups))
            cells = new_cells
            if changed:
                break
    return cells


def _certificate(g: WeightedGraph, order: list[int]) -> Certificate:
    pos = {v: k for k, v in enumerate(order)}
    weights = tuple(g.weights[v] for v in order)
    edges = tuple(sorted((min(pos[i], pos[j]), max(pos[i], pos[j])) for i, j in g.edges))
    return (weights, edges)


def canonical_order(g: WeightedGraph) -> list[int]:
    """Vertex indices listed in canonical order."""
    if g.n == 0:
        return []
    adj = g.adj
    deg = g.degrees()
    initial: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        initial.setdefault((g.weights[v], deg[v]), []).append(v)
    cells = _refine(adj, [initial[k] for k in sorted(initial)])

    best: list[Certificate | None] = [None]
    best_order: list[list[int]] = [[]]

    def search(cells: list[list[int]]) -> None:
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best[0] is None or cert < best[0]:
                best[0] = cert
                best_order[0] = order
            return
        cell = cells[target]
        # swapping two twins of the target cell is an automorphism fixing
        # everything individualized so far: one branch per twin class suffices
        reps: list[int] = []
        for v in cell:
            if not any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
                reps.append(v)
        for v in reps:
            split = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1 :]
            search(_refine(adj, split))

    search(cells)
    return best_order[0]


def canonical_form(g: WeightedGraph) -> CanonicalForm:
    order = canonical_order(g)
    pos = {v: k for k, v in enumerate(order)}
    graph = WeightedGraph(
        tuple(str(k) for k in range(g.n)),
        tuple(g.weights[v] for v in order),
        tuple((pos[i], pos[j]) for i, j in g.edges),
    )
    return CanonicalForm(graph, {g.ids[v]: pos[v] for v in range(g.n)})


def canonical_key(g: WeightedGraph) -> Certificate:
    return _certificate(g, canonical_order(g))


def isomorphic(g: WeightedGraph, h: WeightedGraph) -> bool:
    """Weight-preserving isomorphism test."""
    if g.n != h.n or g.m != h.m or sorted(g.weights) != sorted(h.weights):
        return False
    return canonical_key(g) == canonical_key(h)
