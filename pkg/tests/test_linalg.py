from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from critgraph.linalg import nullspace, rank, solve_unique, tall_rank


def naive_rank(rows):
    """Plain Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=8)
)


@given(matrices)
def test_rank_matches_naive(rows):
    assert rank(rows) == naive_rank(rows)


@given(matrices)
def test_nullspace(rows):
    ncols = len(rows[0])
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - rank(rows)
    for z in basis:
        assert all(isinstance(x, int) for x in z)
        assert all(sum(a * b for a, b in zip(r, z)) == 0 for r in rows)
    if basis:
        assert rank(basis) == len(basis)


def test_solve_unique():
    assert solve_unique([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve_unique([[1, 1], [2, 2]], [1, 2]) is None


@settings(max_examples=40)
@given(st.integers(2, 9).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=1, max_size=60)))
def test_tall_rank(rows):
    r, chosen = tall_rank(np.array(rows, dtype=np.int8))
    assert r == naive_rank(rows)
    assert len(chosen) == r
    assert rank([rows[i] for i in chosen]) == r


def test_tall_rank_large_entries():
    # rank deficiency that only shows over Q, not over small primes by chance
    rows = [[1, 0, 0], [0, 1, 0], [1, 1, 0]] * 500
    r, _ = tall_rank(np.array(rows, dtype=np.int64))
    assert r == 2
