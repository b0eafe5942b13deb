"""The bundled corpus of small graphs used by the batch checks.

:func:`corpus_graphs` is the source of truth; the JSON files shipped in the
``corpus`` data directory are generated from it by :func:`write_corpus`.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .graph import (
    GraphDocument,
    WeightedGraph,
    complete,
    cycle,
    parse_graph,
    serialize_graph,
    triangles_sharing_edge,
)
from .transforms import elementary_odd_subdivision, subdivide_all, unit_odd_subdivision


def _numbered(n: int, edges: list[tuple[int, int]], weights: tuple[int, ...]) -> WeightedGraph:
    ids = [f"u{i}" for i in range(n)]
    return WeightedGraph.from_edges(ids, [(ids[i], ids[j]) for i, j in edges], weights)


def odd_wheel(k: int = 5) -> WeightedGraph:
    rim = cycle(k)
    edges = rim.edge_ids() + [("hub", v) for v in rim.ids]
    return WeightedGraph.from_edges(list(rim.ids) + ["hub"], edges)


# defect-2 basis members found by the enumeration (see basis.py)
HEPTA_CFG = _numbered(7, [(0, 5), (0, 6), (1, 4), (1, 6), (2, 3), (2, 6), (3, 4), (3, 5), (4, 5)],
                      (1, 1, 1, 1, 1, 1, 2))
HEPTA_FDG = _numbered(7, [(0, 3), (0, 6), (1, 3), (1, 5), (2, 3), (2, 4), (4, 5), (4, 6), (5, 6)],
                      (1, 1, 1, 1, 2, 2, 2))
OCTA_FDG = _numbered(8, [(0, 5), (0, 7), (1, 5), (1, 6), (2, 4), (2, 7), (3, 4), (3, 6), (4, 5), (6, 7)],
                     (1, 1, 1, 1, 1, 1, 2, 2))


def corpus_graphs() -> dict[str, WeightedGraph]:
    k4 = complete(4)
    k4w2 = complete(4, [2] * 4)
    return {
        "k3": complete(3),
        "c5": cycle(5),
        "c7": cycle(7),
        "c9": cycle(9),
        "k4": k4,
        "k5": complete(5),
        "wheel5": odd_wheel(5),
        "wheel5_hub2": odd_wheel(5).with_weights([1] * 5 + [2]),
        "c4": cycle(4),
        "c6": cycle(6),
        "p4": WeightedGraph.from_edges(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4")]),
        "diamond": triangles_sharing_edge(),
        "k3_w211": complete(3, [2, 1, 1]),
        "k3_w222": complete(3, [2, 2, 2]),
        "k3_w2_elementary": elementary_odd_subdivision(complete(3, [2, 2, 2]), [("v1", "v2")]),
        "k4_w2": k4w2,
        "k4_w2_unit_sub": unit_odd_subdivision(k4w2, {("v1", "v2"): 3}),
        "k4_sub1": unit_odd_subdivision(k4, {("v1", "v2"): 3}),
        "k4_sub5": unit_odd_subdivision(k4, {("v1", "v2"): 5}),
        "k4_sub_all": subdivide_all(k4, 3),
        "k4_elementary": elementary_odd_subdivision(k4, [("v1", "v2"), ("v3", "v4")]),
        "k5_sub1": unit_odd_subdivision(complete(5), {("v1", "v2"): 3}),
        "c5_elementary": elementary_odd_subdivision(cycle(5), [("v1", "v2")]),
        "wheel5_sub": unit_odd_subdivision(odd_wheel(5), {("hub", "v1"): 3}),
        "hepta_cfg": HEPTA_CFG,
        "hepta_cfg_sub": unit_odd_subdivision(HEPTA_CFG, {("u2", "u3"): 3}),
        "hepta_fdg": HEPTA_FDG,
        "octa_fdg": OCTA_FDG,
    }


def corpus_dir() -> Path:
    return Path(str(resources.files("critgraph") / "corpus"))


def write_corpus(directory: str | Path) -> list[Path]:
    out = []
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, g in corpus_graphs().items():
        p = d / f"{name}.json"
        p.write_text(serialize_graph(GraphDocument(g, {"name": name})) + "\n")
        out.append(p)
    return out


def load_corpus(directory: str | Path | None = None) -> dict[str, WeightedGraph]:
    d = Path(directory) if directory is not None else corpus_dir()
    docs = {}
    for p in sorted(d.glob("*.json")):
        doc = parse_graph(p.read_text())
        docs[doc.name or p.stem] = doc.graph
    return docs
