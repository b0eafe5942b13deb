import itertools
import random

import pytest

from critgraph.errors import PreconditionError
from critgraph.graph import complete, cycle
from critgraph.stability import defect, is_alpha_critical
from critgraph.tournament import (
    ColoredDigraph,
    a_sequence,
    blow_up,
    build_dg,
    fan_subsets,
    has_admissible_tournament,
    hub_digraphs,
    max_acyclic_tournament,
    max_mono_admissible_tournament,
    normalize_for_dg,
    transitive_tournament,
)


@pytest.fixture(scope="module")
def k4n():
    return normalize_for_dg(complete(4))


@pytest.fixture(scope="module")
def k5n():
    return normalize_for_dg(complete(5))


def test_normalize_k4(k4n):
    assert k4n.n == 16
    assert sorted(k4n.degrees()).count(3) == 4
    assert defect(k4n) == 2 and is_alpha_critical(k4n)


def test_normalize_k5(k5n):
    deg = k5n.degrees()
    assert max(deg) == 3 and defect(k5n) == 3 and is_alpha_critical(k5n)
    assert not any(deg[i] == 3 and deg[j] == 3 for i, j in k5n.edges)


def test_normalize_rejects_cycles():
    with pytest.raises(PreconditionError, match="degree"):
        normalize_for_dg(cycle(7))


def _check_structure(d):
    group = {v: gi for gi, grp in enumerate(d.groups) for v in grp}
    for (u, v) in d.arcs:
        assert group[u] != group[v]
    # colour depends on (source, target group) only; all three arcs present together
    for u in range(d.n):
        for gi, grp in enumerate(d.groups):
            cols = [d.arcs.get((u, w)) for w in grp]
            assert len(set(cols)) == 1


def test_dg_k4(k4n):
    d = build_dg(k4n)
    assert d.n == 12 and len(d.groups) == 4
    _check_structure(d)
    for e_label in d.vertices:
        assert e_label.count("-") >= 1


def test_chosen_sets_contain_edge_ends(k4n):
    d = build_dg(k4n)
    by_label = {k4n.edge_label(e): e for e in k4n.edges}
    for label, t in zip(d.vertices, d.chosen_sets):
        i, j = by_label[label]
        assert {k4n.ids[i], k4n.ids[j]} <= set(t)


def test_claim_one(k4n, k5n):
    rng = random.Random(2)
    for g in (k4n, k5n):
        delta = defect(g)
        for k in range(10):
            d = build_dg(g, None if k == 0 else rng)
            _check_structure(d)
            size, witness, color = max_mono_admissible_tournament(d)
            assert size <= delta
            assert len(witness) == size


def test_empty_digraph_tournament():
    d = ColoredDigraph(("a", "b", "c"), {})
    assert max_mono_admissible_tournament(d)[0] <= 1
    assert len(max_acyclic_tournament(d)) == 1


def test_hub_digraphs_complementary(k5n):
    d = build_dg(k5n)
    R, B = hub_digraphs(d)
    p = len(d.hubs)
    assert set(R.arcs).isdisjoint(B.arcs)
    assert set(R.arcs) | set(B.arcs) == {(i, k) for i in range(p) for k in range(p) if i != k}


def test_red_blue_are_blowups(k5n):
    d = build_dg(k5n, random.Random(4))
    R, B = hub_digraphs(d)
    for color, base in (("red", R), ("blue", B)):
        subsets = fan_subsets(d, color)
        assert set(subsets) == set(base.arcs)
        bu = blow_up(ColoredDigraph(base.vertices, {a: color for a in subsets}), subsets)
        # blow-up vertex v_i is edge slot i of hub v
        assert set(bu.result.arcs) == set(d.part(color).arcs)


def test_blow_up_examples():
    single = ColoredDigraph(("x", "y"), {(0, 1): "black"})
    assert len(blow_up(single, {(0, 1): {2}}).result.arcs) == 3
    t = transitive_tournament(3)
    full = blow_up(t, {a: {1, 2, 3} for a in t.arcs}).result
    # lexicographic product: every copy of v points to every copy of w
    assert len(full.arcs) == 9 * len(t.arcs)
    with pytest.raises(PreconditionError):
        blow_up(single, {(0, 1): set()})


def test_a_sequence():
    assert [a_sequence(k) for k in range(1, 5)] == [1, 4, 13, 40]
    with pytest.raises(PreconditionError):
        a_sequence(0)


def test_claim_three_small_sample():
    t = transitive_tournament(a_sequence(2))
    arcs = sorted(t.arcs)
    rng = random.Random(0)
    choices = [s for r in (1, 2, 3) for s in itertools.combinations((1, 2, 3), r)]
    for _ in range(200):
        subsets = {a: rng.choice(choices) for a in arcs}
        assert has_admissible_tournament(blow_up(t, subsets).result, 2)
