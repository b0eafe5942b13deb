"""Brute-force oracles and hypothesis strategies shared by the tests.

The oracles enumerate all vertex subsets directly and share no code with the
library's solvers.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from critgraph.graph import WeightedGraph


def subsets(n):
    return range(1 << n)


def induced(g, mask):
    return sum(1 for i, j in g.edges if mask >> i & 1 and mask >> j & 1)


def weight(g, mask):
    return sum(w for k, w in enumerate(g.weights) if mask >> k & 1)


def bf_alpha(g):
    return max(weight(g, m) for m in subsets(g.n) if induced(g, m) == 0)


def bf_max_stable(g):
    a = bf_alpha(g)
    return [m for m in subsets(g.n) if induced(g, m) == 0 and weight(g, m) == a]


def bf_beta(g):
    return max(weight(g, m) - induced(g, m) for m in subsets(g.n))


def bf_max_worth(g):
    b = bf_beta(g)
    return [m for m in subsets(g.n) if weight(g, m) - induced(g, m) == b]


def bf_strengths(g):
    base = bf_alpha(g)
    return [bf_alpha(g.delete_edge(e)) - base for e in g.edges]


def numbered(n, edges, weights=None):
    ids = [str(i) for i in range(n)]
    return WeightedGraph.from_edges(ids, [(ids[i], ids[j]) for i, j in edges], weights)


@st.composite
def weighted_graphs(draw, min_n=1, max_n=8, max_weight=3, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # add a random spanning tree first
        parents = [draw(st.integers(0, k - 1)) for k in range(1, n)]
        chosen = sorted(set(chosen) | {(p, k) for k, p in zip(range(1, n), parents)})
    weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    return numbered(n, sorted(chosen), weights)


@pytest.fixture(scope="session")
def corpus():
    from critgraph.corpus import load_corpus

    return load_corpus()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
