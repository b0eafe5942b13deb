import random

import pytest
from hypothesis import given

from critgraph.errors import SizeCapError
from critgraph.config import LIMITS
from critgraph.graph import GraphError, WeightedGraph, complete, connected, cycle, path
from critgraph.stability import (
    alpha,
    defect,
    edge_strength,
    is_alpha_critical,
    is_critical_weighted,
    lex_least_max_stable_set,
    max_stable_set_with,
    maximum_stable_sets,
    split_vertex,
    stability_number,
    strength,
)
from critgraph.transforms import unit_odd_subdivision

from conftest import bf_alpha, bf_max_stable, bf_strengths, weighted_graphs


@given(weighted_graphs(max_n=10))
def test_alpha_matches_brute_force(g):
    rep = alpha(g)
    assert rep.alpha == bf_alpha(g)
    assert [s.mask for s in rep.max_stable_sets] == bf_max_stable(g)
    assert rep.defect == g.total_weight - 2 * rep.alpha
    for s in rep.max_stable_sets:
        assert s.is_stable and s.weight == rep.alpha


@given(weighted_graphs(max_n=8))
def test_strength_matches_brute_force(g):
    s = strength(g)
    assert s.values() == bf_strengths(g)
    for (i, j), val in zip(g.edges, s.values()):
        assert 0 <= val <= min(g.weights[i], g.weights[j])
        if g.is_unit():
            assert val <= 1


@given(weighted_graphs(max_n=8))
def test_lex_least(g):
    assert lex_least_max_stable_set(g) == min(
        bf_max_stable(g), key=lambda m: sorted(i for i in range(g.n) if m >> i & 1)
    )


def test_alpha_examples():
    k3 = alpha(complete(3))
    assert (k3.alpha, k3.defect, len(k3.max_stable_sets)) == (1, 1, 3)
    c5 = alpha(cycle(5))
    assert (c5.alpha, c5.defect, len(c5.max_stable_sets)) == (2, 1, 5)
    k4 = alpha(complete(4))
    assert (k4.alpha, k4.defect) == (1, 2)


def test_strength_examples():
    assert set(strength(cycle(5)).values()) == {1}
    assert set(strength(complete(3)).values()) == {1}
    p4 = path(4)
    assert strength(p4)[("v2", "v3")] == 0
    assert edge_strength(p4, (1, 2)) == 0


def test_alpha_critical_examples():
    assert is_alpha_critical(cycle(7))
    assert is_alpha_critical(complete(4))
    assert not is_alpha_critical(path(4))
    with pytest.raises(GraphError):
        is_alpha_critical(complete(3, [2, 1, 1]))


def test_alpha_critical_connectivity():
    two = WeightedGraph.from_edges(list("abcdef"), [("a", "b"), ("b", "c"), ("a", "c"),
                                                   ("d", "e"), ("e", "f"), ("d", "f")])
    assert is_alpha_critical(two)
    assert not is_alpha_critical(two, require_connected=True)


def test_critical_weighted_examples():
    assert is_critical_weighted(cycle(5))
    assert not is_critical_weighted(cycle(4))
    # Deleting the edge between the two weight-1 vertices leaves alpha at 2,
    # so this weighting is not critical.
    k3 = complete(3, [2, 1, 1])
    assert bf_alpha(k3.delete_edge((1, 2))) == bf_alpha(k3) == 2
    assert not is_critical_weighted(k3)


def test_critical_needs_three_vertices():
    with pytest.raises(GraphError):
        is_critical_weighted(complete(2))


def test_split_k5():
    g = complete(5)
    h = split_vertex(g, "v1", ["v2", "v3"], ["v4", "v5"])
    assert h.n == 7
    assert is_alpha_critical(h) and connected(h)
    assert defect(h) == defect(g) == 3
    deg = {v: h.degree(h.index[v]) for v in ("v1.1", "v1.2", "v1.0")}
    assert deg == {"v1.1": 3, "v1.2": 3, "v1.0": 2}


def test_split_errors():
    with pytest.raises(GraphError, match="degree"):
        split_vertex(complete(4), "v1", ["v2"], ["v3", "v4"])
    with pytest.raises(GraphError, match="partition"):
        split_vertex(complete(5), "v1", ["v2", "v3"], ["v4", "v2"])
    with pytest.raises(GraphError, match="unit"):
        split_vertex(complete(5, [2, 1, 1, 1, 1]), "v1", ["v2", "v3"], ["v4", "v5"])


def test_split_corpus_graphs(corpus):
    rng = random.Random(5)
    checked = 0
    for name, g in corpus.items():
        if not g.is_unit() or not connected(g) or not is_alpha_critical(g):
            continue
        for i in range(g.n):
            if g.degree(i) < 4:
                continue
            nbrs = [g.ids[j] for j in g.neighbors(i)]
            rng.shuffle(nbrs)
            h = split_vertex(g, g.ids[i], nbrs[:2], nbrs[2:])
            assert connected(h) and is_alpha_critical(h) and defect(h) == defect(g), name
            checked += 1
    assert checked > 0


def test_odd_subdivision_keeps_criticality(corpus):
    for name, g in corpus.items():
        if not g.is_unit() or not connected(g) or g.n > 9 or not is_alpha_critical(g):
            continue
        for e in g.edge_ids()[:3]:
            for length in (3, 5):
                h = unit_odd_subdivision(g, {e: length})
                assert is_alpha_critical(h) and defect(h) == defect(g), (name, e, length)


def test_max_stable_set_with():
    c5 = cycle(5)
    t = max_stable_set_with(c5, include=1 << 0, exclude=1 << 2)
    assert t is not None and t & 1 and not t & 4 and c5.is_stable(t)
    assert max_stable_set_with(c5, include=0b11) is None


def test_size_cap():
    old = LIMITS.enumerate_max_n
    LIMITS.enumerate_max_n = 4
    try:
        with pytest.raises(SizeCapError):
            maximum_stable_sets(cycle(5))
        assert stability_number(cycle(5)) == 2
    finally:
        LIMITS.enumerate_max_n = old
