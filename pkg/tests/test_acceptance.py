"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (printed immediately and repeated in the
terminal summary) and then asserts, so a failure is both reported and fatal.
"""

from __future__ import annotations

import itertools
import random
import time

import pytest

from critgraph.analysis import analyze_graph
from critgraph.basis import SearchSpace, connected_structures, enumerate_basis
from critgraph.canon import canonical_key, isomorphic
from critgraph.config import LIMITS
from critgraph.corpus import load_corpus
from critgraph.graph import complete, cycle, k2_cutsets
from critgraph.polytopes import (
    _all_position_arrays,
    fdg_certificate,
    graphical_inequality,
    is_cfg,
    is_facet_graph,
    is_fdg,
    is_one_cfg,
    lop_oracle,
)
from critgraph.stability import defect, stability_number, strength
from critgraph.tournament import (
    a_sequence,
    admissible_order_at_least,
    blowup_out_masks,
    build_dg,
    max_mono_admissible_tournament,
    normalize_for_dg,
    transitive_tournament,
)
from critgraph.transforms import (
    elementary_odd_subdivision,
    shrink_candidates,
    shrink_once,
    shrink_to_basis,
    to_one_cfg,
    unit_odd_subdivision,
)
from critgraph.worth import (
    max_worth,
    maximum_worth_sets,
    random_covering_sequence,
    sequence_bound,
    subdefect,
    worth_set_pool,
)

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    RESULTS.append(line)
    print(line)


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


@pytest.fixture
def wide_caps():
    """Lift the enumeration caps for checks on subdivided corpus graphs."""
    old = (LIMITS.enumerate_max_n, LIMITS.alpha_max_n)
    LIMITS.enumerate_max_n = LIMITS.alpha_max_n = 64
    yield
    LIMITS.enumerate_max_n, LIMITS.alpha_max_n = old


def _fdgs(corpus):
    return {name: g for name, g in corpus.items() if g.n >= 3 and is_fdg(g).is_fdg}


def _cfgs(corpus):
    return {name: g for name, g in corpus.items() if g.n >= 3 and is_cfg(g)}


def test_criterion_1_defect_one_bases():
    start = time.perf_counter()
    fdg = enumerate_basis(SearchSpace("fdg", 1, 8))
    cfg = enumerate_basis(SearchSpace("cfg", 1, 8))
    elapsed = time.perf_counter() - start
    k3 = complete(3)
    ok = (
        len(fdg.members) == 1 and isomorphic(fdg.members[0].graph, k3)
        and len(cfg.members) == 1 and isomorphic(cfg.members[0].graph, k3)
        and elapsed < 60
    )
    record(1, "defect-1 bases are exactly {(K3,1)}", ok,
           f"fdg {len(fdg.members)} member(s), cfg {len(cfg.members)} member(s), {elapsed:.1f}s")
    assert ok


def test_criterion_2_classical_examples():
    start = time.perf_counter()
    graphs = {"K3": complete(3), "C5": cycle(5), "C7": cycle(7), "K4": complete(4)}
    verdicts = {
        name: (is_facet_graph(g).is_facet, fdg_certificate(g).is_facet) for name, g in graphs.items()
    }
    orc = lop_oracle(graphical_inequality(complete(3)))
    orders = _all_position_arrays(6).shape[0]
    ok = (
        all(a and b for a, b in verdicts.values())
        and orc.is_facet and orders == 720 and orc.matrix_rank == 15
    )
    record(2, "K3, C5, C7, K4 are facet-graphs and FDGs; K3 oracle", ok,
           f"{orders} orders, affine rank {orc.matrix_rank}, {orc.tight_count} tight, "
           f"{time.perf_counter() - start:.1f}s")
    assert ok


def test_criterion_3_oracle_agrees_with_certificate():
    start = time.perf_counter()
    seen = set()
    graphs = []
    for s in connected_structures(4):
        if s.n < 3:
            continue
        for w in itertools.product((1, 2), repeat=s.n):
            g = s.with_weights(w)
            key = canonical_key(g)
            if key not in seen:
                seen.add(key)
                graphs.append(g)
    disagree = []
    facets = 0
    for g in graphs:
        cert = fdg_certificate(g)
        orc = lop_oracle(graphical_inequality(g))
        facets += orc.is_facet
        if cert.is_facet != orc.is_facet:
            disagree.append(g)
    elapsed = time.perf_counter() - start
    ok = not disagree and elapsed < 1800
    record(3, "certificate and LOP oracle agree on all |V|<=4 graphs, weights 1..2", ok,
           f"{len(graphs)} graphs, {facets} facets, {len(disagree)} disagreements, {elapsed:.1f}s")
    assert ok


def test_criterion_4_proposition_9_round_trip(corpus, wide_caps):
    failures = []
    fdgs = _fdgs(corpus)
    for name, g in fdgs.items():
        one = to_one_cfg(g, oracle=None, verify=False)
        good = is_one_cfg(one) and defect(one) == subdefect(g)
        back = shrink_to_basis(one, check=False)
        good = good and isomorphic(back, shrink_to_basis(g, check=False))
        if not good:
            failures.append(name)
    ok = bool(fdgs) and not failures
    record(4, "FDG -> 1-CFG -> basis round trip", ok,
           f"{len(fdgs)} corpus FDGs, failures {failures or 'none'}")
    assert ok


def test_criterion_5_invariance(corpus):
    count = 0
    failures = []
    for name, g in _cfgs(corpus).items():
        if g.n > 10:
            continue
        s = strength(g)
        for e in g.edge_ids():
            h = elementary_odd_subdivision(g, [e])
            sh = strength(h)
            label = f"{e[0]}-{e[1]}"
            path = [(e[0], f"{label}#1"), (f"{label}#1", f"{label}#2"), (f"{label}#2", e[1])]
            others = all(sh[f] == s[f] for f in g.edge_ids() if f != e)
            good = is_cfg(h) and defect(h) == defect(g) and all(sh[p] == s[e] for p in path) and others
            count += 1
            if not good:
                failures.append((name, "elementary", e))
    for name, g in _fdgs(corpus).items():
        if g.n > 9:
            continue
        lam = subdefect(g)
        for e in g.edge_ids():
            for length in (3, 5):
                h = unit_odd_subdivision(g, {e: length})
                count += 1
                if not (is_fdg(h).is_fdg and subdefect(h) == lam):
                    failures.append((name, f"unit-{length}", e))
        for e in shrink_candidates(g):
            h = shrink_once(g, *e)
            count += 1
            if not (is_fdg(h).is_fdg and subdefect(h) == lam):
                failures.append((name, "shrink", e))
    ok = count >= 50 and not failures
    record(5, "subdivision and shrinking invariants", ok,
           f"{count} transformations, {len(failures)} failures")
    assert ok


def _degree_ok(g, d):
    return all(
        deg <= a + d <= 2 * d and (d == 1 or deg <= 2 * d - 1)
        for deg, a in zip(g.degrees(), g.weights)
    )


def test_criterion_6_bounds(corpus):
    failures = []
    cfgs, fdgs = _cfgs(corpus), _fdgs(corpus)
    for name, g in cfgs.items():
        if not _degree_ok(g, defect(g)):
            failures.append((name, "degree (cfg)"))
        if is_one_cfg(g) and not (stability_number(g) == max_worth(g) and defect(g) == subdefect(g)):
            failures.append((name, "alpha = beta"))
    for name, g in fdgs.items():
        if not _degree_ok(g, subdefect(g)):
            failures.append((name, "degree (fdg)"))
        tight = maximum_worth_sets(g)
        for i, j in g.edges:
            if len({(t >> i & 1, t >> j & 1) for t in tight}) != 4:
                failures.append((name, "four traces"))
                break
        if min(g.degrees()) < 2:
            failures.append((name, "min degree"))
        if k2_cutsets(g):
            failures.append((name, "K2 cutset"))
    # the analysis pipeline evaluates the same bounds independently
    for name, g in corpus.items():
        rep = analyze_graph(g, name)
        if not rep.ok:
            failures.append((name, ",".join(rep.violations)))
    ok = not failures
    record(6, "degree, four-trace, min-degree, alpha=beta and K2-cutset bounds", ok,
           f"{len(cfgs)} CFGs, {len(fdgs)} FDGs, failures {failures or 'none'}")
    assert ok


def test_criterion_7_section_four():
    start = time.perf_counter()
    rng = random.Random(2024)
    notes = []
    ok = True
    for label, base in (("K4", complete(4)), ("K5", complete(5))):
        g = normalize_for_dg(base)
        delta = defect(g)
        sizes = []
        for k in range(12):
            d = build_dg(g, None if k == 0 else rng)
            sizes.append(max_mono_admissible_tournament(d)[0])
        pool = worth_set_pool(g, rng)
        bounds = [
            sequence_bound(g, random_covering_sequence(g, rng, pool=pool), check_critical=False).bound
            for _ in range(120)
        ]
        ok &= max(sizes) <= delta and max(bounds) <= delta
        notes.append(f"{label}: delta {delta}, tournaments <= {max(sizes)} over {len(sizes)} selections, "
                     f"covering-sequence bound <= {max(bounds)} over {len(bounds)} sequences")

    seq = [a_sequence(k) for k in range(1, 5)]
    ok &= seq == [1, 4, 13, 40]

    subsets = [s for r in (1, 2, 3) for s in itertools.combinations((1, 2, 3), r)]
    t2 = transitive_tournament(a_sequence(2))
    arcs2 = sorted(t2.arcs)
    missing = 0
    total = 0
    for choice in itertools.product(subsets, repeat=len(arcs2)):
        total += 1
        if not admissible_order_at_least(blowup_out_masks(t2.n, arcs2, choice), 2):
            missing += 1
    ok &= missing == 0 and total == 7 ** 6
    t3 = transitive_tournament(a_sequence(3))
    arcs3 = sorted(t3.arcs)
    sampled_missing = 0
    for _ in range(300):
        choice = [rng.choice(subsets) for _ in arcs3]
        if not admissible_order_at_least(blowup_out_masks(t3.n, arcs3, choice), 3):
            sampled_missing += 1
    ok &= sampled_missing == 0
    notes.append(f"a_k = {seq}")
    notes.append(f"k=2: {total} blow-ups, {missing} without order-2 tournament")
    notes.append(f"k=3: 300 sampled blow-ups, {sampled_missing} without order-3 tournament")
    record(7, "D_G tournaments, covering sequences, blow-ups", ok,
           "; ".join(notes) + f"; {time.perf_counter() - start:.1f}s")
    assert ok


def test_criterion_8_defect_two_catalog():
    start = time.perf_counter()
    cat = enumerate_basis(SearchSpace("cfg", 2, 10))
    elapsed = time.perf_counter() - start
    members = cat.members
    has_k4 = cat.find(complete(4)) is not None
    one_critical = all(set(m.strengths) == {1} for m in members)
    bounded = all(
        max(m.graph.degrees()) <= 3 and max(m.graph.weights) <= 2 for m in members
    )
    ok = has_k4 and one_critical and bounded and elapsed < 7200
    orders = ", ".join(f"n={n}: {c}" for n, c in cat.count_by_order().items())
    record(8, "defect-2 CFG catalog at cap 10", ok,
           f"{len(members)} members ({orders}); K4 present {has_k4}; "
           f"all 1-critical {one_critical}; {cat.structures_examined} structures; {elapsed:.1f}s")
    assert ok


def test_criterion_8_companion_catalogs():
    """Reported alongside criterion 8: the subdefect-2 FDG catalog and the CFG
    catalog without the primitive-weight restriction."""
    fdg = enumerate_basis(SearchSpace("fdg", 2, 10))
    scaled = enumerate_basis(SearchSpace("cfg", 2, 10, primitive=False))
    extra = [m for m in scaled.members if all(w % 2 == 0 for w in m.graph.weights)]
    RESULTS.append(
        f"report: fdg subdefect-2 catalog at cap 10 has {len(fdg.members)} members "
        f"({', '.join(f'n={n}: {c}' for n, c in fdg.count_by_order().items())}), "
        f"{sum(1 for m in fdg.members if set(m.strengths) != {1})} of them not 1-critical; "
        f"cfg catalog without the primitive filter has {len(scaled.members)} members, "
        f"{len(extra)} with all weights even"
    )
    assert fdg.find(complete(4)) is not None
    for m in extra:
        halved = m.graph.with_weights([w // 2 for w in m.graph.weights])
        assert defect(halved) == 1 and is_cfg(halved)
