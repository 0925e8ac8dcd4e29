"""Pure-Python staircase scan, used when the compiled extension is unavailable.

A *plan* is the list of staircases of one size, each given as the column
indices of its cells and of its in-box corners within an evaluation table.
``scan`` row-reduces ``[cells | corners]`` at the data points for every
staircase and reports, for the invertible ones, which cells occur in each
corner's normal form.
"""
from __future__ import annotations

from .ff import inverse_table

BACKEND = "python"


def make_plan(stairs, N: int):
    return [(tuple(lam), tuple(cor)) for lam, cor in stairs]


def solve_staircase(rows, lam, corners, p: int):
    """Coefficients of each corner column in terms of the ``lam`` columns.

    ``rows`` holds one evaluation row per data point. Returns a list with one
    coefficient list per corner (indexed like ``lam``), or None when the
    ``lam`` block is singular.
    """
    m = len(lam)
    if len(rows) != m:
        raise ValueError(f"{len(rows)} points but staircase of size {m}")
    if p == 2:
        return _solve_gf2(rows, lam, corners)
    inv = inverse_table(p)
    cols = tuple(lam) + tuple(corners)
    A = [[r[c] for c in cols] for r in rows]
    for c in range(m):
        piv = next((i for i in range(c, m) if A[i][c]), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        s = inv[A[c][c]]
        if s != 1:
            A[c] = [v * s % p for v in A[c]]
        rc = A[c]
        for i in range(m):
            f = A[i][c]
            if i != c and f:
                A[i] = [(a - f * b) % p for a, b in zip(A[i], rc)]
    return [[A[i][m + j] for i in range(m)] for j in range(len(corners))]


def _solve_gf2(rows, lam, corners):
    m = len(lam)
    cols = tuple(lam) + tuple(corners)
    A = []
    for r in rows:
        bits = 0
        for j, c in enumerate(cols):
            if r[c]:
                bits |= 1 << j
        A.append(bits)
    for c in range(m):
        bit = 1 << c
        piv = next((i for i in range(c, m) if A[i] & bit), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        rc = A[c]
        for i in range(m):
            if i != c and A[i] & bit:
                A[i] ^= rc
    return [[(A[i] >> (m + j)) & 1 for i in range(m)] for j in range(len(corners))]


def scan(plan, rows, p: int):
    """``[(index, masks)]`` for every staircase in ``plan`` invertible at ``rows``.

    ``masks[j]`` has bit ``i`` set when cell ``i`` appears with nonzero
    coefficient in the normal form of corner ``j``.
    """
    out = []
    for idx, (lam, cor) in enumerate(plan):
        sol = solve_staircase(rows, lam, cor, p)
        if sol is None:
            continue
        masks = []
        for coeffs in sol:
            mask = 0
            for i, c in enumerate(coeffs):
                if c:
                    mask |= 1 << i
            masks.append(mask)
        out.append((idx, tuple(masks)))
    return out
