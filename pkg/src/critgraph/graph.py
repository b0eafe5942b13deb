"""Vertex-weighted simple graphs, vertex subsets and the JSON/DOT formats.

Vertices are addressed by string ids externally and by dense indices
``0..n-1`` (document order) internally.  Vertex subsets are Python ints used
as bitmasks over those indices.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graphs or documents."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class VertexSet:
    """A subset of vertices together with its weight and induced edge count."""

    mask: int
    members: tuple[str, ...]
    weight: int
    induced_edge_count: int

    @property
    def worth(self) -> int:
        return self.weight - self.induced_edge_count

    @property
    def is_stable(self) -> bool:
        return self.induced_edge_count == 0

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, vid: object) -> bool:
        return vid in self.members


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with positive integer vertex weights.

    ``edges`` holds index pairs ``(i, j)`` with ``i < j``, sorted.  Instances
    are immutable; all operations that change structure return a new graph.
    """

    ids: tuple[str, ...]
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.ids)
        if n > MAX_VERTICES:
            raise GraphError(f"graph has {n} vertices, maximum is {MAX_VERTICES}")
        if len(set(self.ids)) != n:
            seen: set[str] = set()
            dup = next(v for v in self.ids if v in seen or seen.add(v))
            raise GraphError(f"duplicate vertex id {dup!r}")
        if len(self.weights) != n:
            raise GraphError("weights and ids differ in length")
        for vid, w in zip(self.ids, self.weights):
            if not isinstance(w, int) or isinstance(w, bool):
                raise GraphError(f"weight of {vid!r} is not an integer")
            if w < 1:
                raise GraphError(f"nonpositive weight {w} on vertex {vid!r}")
        normalized = []
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop at vertex {self.ids[i]!r}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge endpoint out of range: {(i, j)}")
            normalized.append((min(i, j), max(i, j)))
        if len(set(normalized)) != len(normalized):
            dup = next(e for e in normalized if normalized.count(e) > 1)
            raise GraphError(
                f"parallel edge {self.ids[dup[0]]!r}-{self.ids[dup[1]]!r}"
            )
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        ids: Sequence[str],
        edges: Iterable[tuple[str, str]],
        weights: Mapping[str, int] | Sequence[int] | None = None,
    ) -> "WeightedGraph":
        ids = tuple(str(v) for v in ids)
        index = {v: i for i, v in enumerate(ids)}
        if weights is None:
            ws = (1,) * len(ids)
        elif isinstance(weights, Mapping):
            ws = tuple(weights.get(v, 1) for v in ids)
        else:
            ws = tuple(weights)
        pairs = []
        for a, b in edges:
            try:
                pairs.append((index[str(a)], index[str(b)]))
            except KeyError as exc:
                raise GraphError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
        return cls(ids, ws, tuple(pairs))

    # -- basic queries ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.ids)}

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def degree(self, i: int) -> int:
        return popcount(self.adj[i])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def neighbors(self, i: int) -> list[int]:
        return bits(self.adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def is_unit(self) -> bool:
        return all(w == 1 for w in self.weights)

    def weight_of(self, mask: int) -> int:
        return sum(self.weights[i] for i in bits(mask))

    def induced_edges(self, mask: int) -> int:
        """Number of edges with both ends in ``mask`` (written ||S||)."""
        total = 0
        for i in bits(mask):
            total += popcount(self.adj[i] & mask)
        return total // 2

    def worth(self, mask: int) -> int:
        return self.weight_of(mask) - self.induced_edges(mask)

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[i] & mask) for i in bits(mask))

    def vertex_set(self, mask: int) -> VertexSet:
        return VertexSet(
            mask=mask,
            members=tuple(self.ids[i] for i in bits(mask)),
            weight=self.weight_of(mask),
            induced_edge_count=self.induced_edges(mask),
        )

    def mask_from_ids(self, vids: Iterable[str]) -> int:
        try:
            return mask_of(self.index[v] for v in vids)
        except KeyError as exc:
            raise GraphError(f"unknown vertex id {exc.args[0]!r}") from None

    def edge_ids(self) -> list[tuple[str, str]]:
        return [(self.ids[i], self.ids[j]) for i, j in self.edges]

    def edge_label(self, e: tuple[int, int]) -> str:
        return f"{self.ids[e[0]]}-{self.ids[e[1]]}"

    def edge_index(self, u: str, v: str) -> tuple[int, int]:
        i, j = self.index.get(u), self.index.get(v)
        if i is None or j is None or not self.has_edge(i, j):
            raise GraphError(f"{u!r}-{v!r} is not an edge")
        return (min(i, j), max(i, j))

    # -- derived graphs -----------------------------------------------

    def delete_edge(self, e: tuple[int, int]) -> "WeightedGraph":
        e = (min(e), max(e))
        return WeightedGraph(self.ids, self.weights, tuple(f for f in self.edges if f != e))

    def induced(self, mask: int) -> "WeightedGraph":
        keep = bits(mask)
        new = {old: k for k, old in enumerate(keep)}
        return WeightedGraph(
            tuple(self.ids[i] for i in keep),
            tuple(self.weights[i] for i in keep),
            tuple((new[i], new[j]) for i, j in self.edges if i in new and j in new),
        )

    def with_weights(self, weights: Sequence[int]) -> "WeightedGraph":
        return WeightedGraph(self.ids, tuple(weights), self.edges)

    def __repr__(self) -> str:
        w = "" if self.is_unit() else f", weights={list(self.weights)}"
        return f"WeightedGraph(n={self.n}, edges={self.edge_ids()}{w})"


# -- structure ---------------------------------------------------------


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by ``within``."""
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for i in bits(frontier):
                reach |= adj[i]
            reach &= within & ~comp
            comp |= reach
            frontier = reach
        comps.append(comp)
        rest &= ~comp
    return comps


def connected(g: WeightedGraph) -> bool:
    """True iff ``g`` has at most one component; the empty graph counts as connected."""
    return len(component_masks(g.adj, g.full_mask)) <= 1


def k2_cutsets(g: WeightedGraph) -> list[tuple[str, str]]:
    """Edges ``vw`` such that deleting both vertices ``v`` and ``w`` disconnects ``g``."""
    if g.n < 3 or not connected(g):
        raise GraphError("k2_cutsets needs a connected graph with at least three vertices")
    out = []
    for i, j in g.edges:
        rest = g.full_mask & ~(1 << i) & ~(1 << j)
        if len(component_masks(g.adj, rest)) > 1:
            out.append((g.ids[i], g.ids[j]))
    return out


def remote_edges(g: WeightedGraph) -> list[tuple[str, str]]:
    """Edges whose two ends both have degree 2."""
    deg = g.degrees()
    return [(g.ids[i], g.ids[j]) for i, j in g.edges if deg[i] == 2 and deg[j] == 2]


# -- documents ---------------------------------------------------------


@dataclass(frozen=True)
class GraphDocument:
    graph: WeightedGraph
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def name(self) -> str | None:
        return self.metadata.get("name")


def parse_graph(text: str) -> GraphDocument:
    """Parse the JSON graph format into a validated document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from None
    return graph_from_dict(data)


def graph_from_dict(data: Any) -> GraphDocument:
    if not isinstance(data, dict):
        raise GraphError("graph document must be a JSON object")
    vertices = data.get("vertices")
    if not isinstance(vertices, list):
        raise GraphError('"vertices" must be a list')
    ids, weights = [], []
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry:
            raise GraphError('each vertex needs an "id"')
        vid = entry["id"]
        if not isinstance(vid, str):
            raise GraphError(f"vertex id {vid!r} is not a string")
        ids.append(vid)
        weights.append(entry.get("weight", 1))
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphError('"edges" must be a list')
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        pairs.append((e[0], e[1]))
    if len(set(ids)) != len(ids):
        seen: set[str] = set()
        dup = next(v for v in ids if v in seen or seen.add(v))
        raise GraphError(f"duplicate vertex id {dup!r}")
    graph = WeightedGraph.from_edges(ids, pairs, weights)
    metadata = {k: v for k, v in data.items() if k not in ("vertices", "edges")}
    return GraphDocument(graph, metadata)


def graph_to_dict(g: WeightedGraph, name: str | None = None, **metadata: Any) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    doc.update(metadata)
    doc["vertices"] = [{"id": v, "weight": w} for v, w in zip(g.ids, g.weights)]
    doc["edges"] = [[a, b] for a, b in g.edge_ids()]
    return doc


def serialize_graph(doc: GraphDocument | WeightedGraph, indent: int | None = 2) -> str:
    if isinstance(doc, WeightedGraph):
        doc = GraphDocument(doc)
    data = {k: v for k, v in doc.metadata.items()}
    data.update(graph_to_dict(doc.graph))
    return json.dumps(data, indent=indent)


def to_dot(g: WeightedGraph, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    for v, w in zip(g.ids, g.weights):
        lines.append(f'  "{v}" [label="{v}:{w}"];')
    for a, b in g.edge_ids():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- standard families -------------------------------------------------


def cycle(n: int, weights: Sequence[int] | None = None) -> WeightedGraph:
    ids = [f"v{i + 1}" for i in range(n)]
    return WeightedGraph.from_edges(
        ids, [(ids[i], ids[(i + 1) % n]) for i in range(n)], weights
    )


def complete(n: int, weights: Sequence[int] | None = None) -> WeightedGraph:
    ids = [f"v{i + 1}" for i in range(n)]
    return WeightedGraph.from_edges(
        ids, [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)], weights
    )


def path(n: int, weights: Sequence[int] | None = None) -> WeightedGraph:
    ids = [f"v{i + 1}" for i in range(n)]
    return WeightedGraph.from_edges(ids, [(ids[i], ids[i + 1]) for i in range(n - 1)], weights)


def triangles_sharing_edge() -> WeightedGraph:
    """Two triangles glued along the edge v1-v2 (the diamond K4 - e)."""
    return WeightedGraph.from_edges(
        ["v1", "v2", "a", "b"],
        [("v1", "v2"), ("v1", "a"), ("v2", "a"), ("v1", "b"), ("v2", "b")],
    )
