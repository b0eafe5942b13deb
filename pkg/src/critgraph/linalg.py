"""Exact linear algebra over the rationals for small integer matrices.

Rank uses fraction-free (Bareiss) elimination on Python integers.  Tall 0/1
matrices with tens of thousands of rows go through :func:`tall_rank`, which
selects candidate pivot rows modulo a large prime and then proves the result
exactly over Q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

Matrix = Sequence[Sequence[int]]

PRIME = 2_147_483_629  # largest prime below 2**31; products fit in int64


def bareiss_echelon(rows: Matrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the echelon rows (only the nonzero ones) and their pivot columns.
    All intermediate entries are exact integer minors of the input.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, len(a)):
            lead = a[i][c]
            row_i, row_r = a[i], a[r]
            for k in range(c + 1, ncols):
                row_i[k] = (piv * row_i[k] - lead * row_r[k]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Matrix) -> int:
    """Exact rank over Q."""
    return len(bareiss_echelon(rows)[1])


def nullspace(rows: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Integer basis of the right null space ``{y : A y = 0}`` over Q.

    Each basis vector is primitive (gcd 1) with a positive entry at its free
    column.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    # reduced row echelon form over Fractions; sizes here are tiny
    a = [[Fraction(int(x)) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -a[row_idx][fcol]
        basis.append(_primitive(vec))
    return basis


def _primitive(vec: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def solve_unique(rows: Matrix, rhs: Sequence[int]) -> list[Fraction] | None:
    """The unique solution of ``A y = rhs`` or ``None`` if it is not unique or absent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if rank(rows) != ncols or rank(aug) != ncols:
        return None
    a = [[Fraction(int(x)) for x in r] for r in aug]
    sol = [Fraction(0)] * ncols
    r = 0
    pivots = []
    for c in range(ncols):
        p = next(i for i in range(r, len(a)) if a[i][c] != 0)
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    for row_idx, c in enumerate(pivots):
        sol[c] = a[row_idx][ncols]
    return sol


def rank_mod_p(matrix: np.ndarray, p: int = PRIME) -> tuple[int, list[int]]:
    """Rank modulo ``p`` and indices of a set of rows independent mod ``p``.

    Rows independent modulo ``p`` are independent over Q as well, so the
    result is a lower bound on the rational rank.
    """
    a = np.asarray(matrix, dtype=np.int64) % p
    nrows, ncols = a.shape
    row_ids = np.arange(nrows)
    chosen: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p_idx = r + nz[0]
        if p_idx != r:
            a[[r, p_idx]] = a[[p_idx, r]]
            row_ids[[r, p_idx]] = row_ids[[p_idx, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1 :, c].copy()
        mask = below != 0
        if mask.any():
            rest = a[r + 1 :]
            rest[mask] = (rest[mask] - (below[mask, None] * a[r]) % p) % p
        chosen.append(int(row_ids[r]))
        r += 1
    return r, chosen


def tall_rank(matrix: np.ndarray) -> tuple[int, list[int]]:
    """Exact rational rank of a (possibly very tall) integer matrix.

    Returns the rank and the indices of a maximal independent row subset.
    Candidate rows come from elimination mod a prime; the remaining rows are
    then checked exactly against the integer null space of the candidates.
    """
    a = np.asarray(matrix, dtype=np.int64)
    if a.size == 0:
        return 0, []
    ncols = a.shape[1]
    _, chosen = rank_mod_p(a)
    while True:
        if len(chosen) == ncols:
            return ncols, chosen
        basis_rows = [a[i].tolist() for i in chosen]
        ns = nullspace(basis_rows, ncols) if basis_rows else [
            [1 if k == c else 0 for k in range(ncols)] for c in range(ncols)
        ]
        kernel = np.array(ns, dtype=object).T
        prod = a.astype(object).dot(kernel)
        bad = np.nonzero(np.any(prod != 0, axis=1))[0]
        if bad.size == 0:
            return len(chosen), chosen
        chosen = chosen + [int(bad[0])]
