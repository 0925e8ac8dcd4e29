"""Exact linear feasibility: strict homogeneous inequalities and convex combinations.

Everything runs on ints and :class:`fractions.Fraction`; no floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _normalize(row) -> tuple:
    g = 0
    for v in row:
        g = gcd(g, v)
    return tuple(v // g for v in row) if g > 1 else tuple(row)


@dataclass(frozen=True)
class StrictInequalitySystem:
    """Constraints ``w . d > 0`` for each integer row ``d``, in ``n`` unknowns."""

    n: int
    rows: tuple = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        for r in rows:
            if len(r) != self.n:
                raise ValueError(f"row {r} does not have {self.n} entries")
            if not any(r):
                raise ValueError("zero row in a strict system")
        object.__setattr__(self, "rows", rows)

    def satisfied_by(self, w: Sequence) -> bool:
        return all(w_i > 0 for w_i in w) and all(
            sum(a * b for a, b in zip(w, r)) > 0 for r in self.rows)


def fm_feasible(system: StrictInequalitySystem):
    """Decide whether some ``w > 0`` satisfies every row strictly.

    Returns ``(True, w)`` with a positive integer witness, or ``(False, None)``.
    Fourier-Motzkin elimination; positivity of ``w`` enters as unit rows.
    """
    n = system.n
    current = {_normalize(r) for r in system.rows}
    current.update(tuple(int(i == j) for j in range(n)) for i in range(n))
    remaining = list(range(n))
    stages = []
    while remaining:
        def cost(k):
            pos = sum(1 for r in current if r[k] > 0)
            neg = sum(1 for r in current if r[k] < 0)
            return pos * neg - pos - neg

        k = min(remaining, key=cost)
        remaining.remove(k)
        stages.append((k, tuple(current)))
        pos = [r for r in current if r[k] > 0]
        neg = [r for r in current if r[k] < 0]
        nxt = {r for r in current if r[k] == 0}
        for a in pos:
            for b in neg:
                ca, cb = a[k], -b[k]
                row = _normalize(tuple(cb * x + ca * y for x, y in zip(a, b)))
                if not any(row):
                    return False, None
                nxt.add(row)
        current = nxt
    if current:
        return False, None
    return True, _back_substitute(n, stages)


def _back_substitute(n: int, stages) -> tuple:
    value = [Fraction(0)] * n
    for k, rows in reversed(stages):
        lo = hi = None
        for r in rows:
            a = r[k]
            if not a:
                continue
            rest = sum(r[j] * value[j] for j in range(n) if j != k)
            bound = Fraction(-rest, a)
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            value[k] = (lo + hi) / 2
        elif lo is not None:
            value[k] = lo + 1
        elif hi is not None:
            value[k] = hi - 1
        else:
            value[k] = Fraction(1)
    scale = lcm(*(v.denominator for v in value)) if value else 1
    w = [int(v * scale) for v in value]
    g = 0
    for v in w:
        g = gcd(g, v)
    return tuple(v // g for v in w) if g > 1 else tuple(w)


def feasible_nonnegative(A: Sequence[Sequence], b: Sequence) -> tuple | None:
    """Find ``x >= 0`` with ``A x = b`` by exact phase-one simplex.

    Returns the solution as Fractions, or None when infeasible. Bland's rule
    prevents cycling.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    T = []
    for i in range(rows):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(int(i == j)) for j in range(rows)]
        T.append(row + art + [rhs])
    basis = [cols + i for i in range(rows)]
    width = cols + rows
    # objective: minimize the sum of artificials; reduced costs kept in z
    z = [-sum(T[i][j] for i in range(rows)) for j in range(width + 1)]
    for j in range(cols, width):
        z[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(rows):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break
        r = best[1]
        pv = T[r][enter]
        T[r] = [v / pv for v in T[r]]
        for i in range(rows):
            if i != r and T[i][enter]:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[r])]
        f = z[enter]
        z = [a - f * c for a, c in zip(z, T[r])]
        basis[r] = enter
    if -z[-1] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = T[i][-1]
    return tuple(x)


def in_convex_hull(q: Sequence[int], T: Sequence[Sequence[int]]) -> bool:
    """True when ``q`` is a convex combination of the points ``T``."""
    if not T:
        return False
    n = len(q)
    A = [[1] * len(T)] + [[t[i] for t in T] for i in range(n)]
    b = [1] + list(q)
    return feasible_nonnegative(A, b) is not None
