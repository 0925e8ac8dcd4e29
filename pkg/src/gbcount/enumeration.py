"""Enumerate every reduced Gröbner basis of an ideal of points.

Distinct reduced bases of I(S) correspond to their standard-monomial sets.
Candidates are the staircases of size ``m`` inside ``{0..p-1}^n``; a candidate
survives when its evaluation matrix at S is invertible (it spans the
quotient) and some strictly positive weight vector puts every corner above
the monomials of its normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb

from . import kernels
from .ff import rank
from .ideal import DataSet, all_points, eval_monomial, evaluation_matrix
from .linineq import StrictInequalitySystem, fm_feasible
from .polynomial import Polynomial, ReducedGB, TermOrder, unit


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class Staircase:
    """Divisibility-closed set of exponent vectors in ``{0..p-1}^n``."""

    n: int
    p: int
    cells: tuple

    def __post_init__(self):
        cells = tuple(sorted({tuple(c) for c in self.cells}))
        cell_set = set(cells)
        for c in cells:
            if len(c) != self.n or any(not 0 <= e < self.p for e in c):
                raise EnumerationError(f"cell {c} outside {{0..{self.p - 1}}}^{self.n}")
            for i, e in enumerate(c):
                if e and c[:i] + (e - 1,) + c[i + 1:] not in cell_set:
                    raise EnumerationError(f"cells are not divisibility-closed at {c}")
        object.__setattr__(self, "cells", cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __contains__(self, mono):
        return tuple(mono) in set(self.cells)

    def __str__(self):
        from .polynomial import format_monomial
        return "{" + ", ".join(format_monomial(c) for c in self.cells) + "}"


def box(n: int, p: int) -> list:
    """Exponent vectors of ``{0..p-1}^n`` in graded, then lexicographic, order."""
    return sorted(product(range(p), repeat=n), key=lambda c: (sum(c), c))


@lru_cache(maxsize=None)
def _staircases(n: int, p: int, m: int) -> tuple:
    cells = box(n, p)
    total = len(cells)
    found = []
    chosen: set = set()

    def lower_present(c):
        return all(not e or c[:i] + (e - 1,) + c[i + 1:] in chosen for i, e in enumerate(c))

    def walk(i, count):
        if count == m:
            found.append(tuple(sorted(chosen)))
            return
        if i == total or count + (total - i) < m:
            return
        c = cells[i]
        if lower_present(c):
            chosen.add(c)
            walk(i + 1, count + 1)
            chosen.discard(c)
        walk(i + 1, count)

    walk(0, 0)
    found.sort()
    return tuple(Staircase(n, p, cs) for cs in found)


def enumerate_staircases(n: int, p: int, m: int) -> list:
    """All staircases with ``m`` cells in ``{0..p-1}^n``, sorted by cell list."""
    if not 0 <= m <= p ** n:
        raise EnumerationError(f"m={m} outside 0..{p ** n}")
    return list(_staircases(n, p, m))


def corners(lam: Staircase) -> list:
    """Minimal monomials outside ``lam``, including ``x_i^p`` where ``lam`` reaches ``x_i^(p-1)``."""
    n = lam.n
    cells = set(lam.cells)
    if not cells:
        return [(0,) * n]
    cand = set()
    for c in cells:
        for i in range(n):
            cand.add(c[:i] + (c[i] + 1,) + c[i + 1:])
    out = []
    for b in cand:
        if b in cells:
            continue
        if all(not e or b[:i] + (e - 1,) + b[i + 1:] in cells for i, e in enumerate(b)):
            out.append(b)
    return sorted(out)


def _box_corners(lam: Staircase) -> list:
    return [c for c in corners(lam) if max(c, default=0) < lam.p]


def _check_size(lam: Staircase, S: DataSet):
    if (lam.n, lam.p) != (S.n, S.p):
        raise EnumerationError("staircase and data set live in different spaces")
    if len(lam) != S.m:
        raise EnumerationError(f"staircase has {len(lam)} cells but S has {S.m} points")


def is_admissible(lam: Staircase, S: DataSet) -> bool:
    _check_size(lam, S)
    if S.m == 0:
        return True
    return rank(evaluation_matrix(list(lam.cells), S)) == S.m


def _normal_form_coeffs(alphas, lam: Staircase, S: DataSet):
    rows = [[eval_monomial(c, pt, S.p) for c in list(lam.cells) + list(alphas)] for pt in S.points]
    m = S.m
    return kernels.solve_staircase(rows, range(m), range(m, m + len(alphas)), S.p)


def normal_form_on_staircase(alpha, lam: Staircase, S: DataSet) -> Polynomial:
    """The combination of ``lam`` monomials agreeing with ``x^alpha`` on S."""
    _check_size(lam, S)
    alpha = tuple(alpha)
    if any(e >= S.p for e in alpha):
        raise EnumerationError(f"exponent of {alpha} is not reduced modulo x^p = x")
    sol = _normal_form_coeffs([alpha], lam, S)
    if sol is None:
        raise EnumerationError(f"staircase {lam} is not admissible for this data set")
    return Polynomial(dict(zip(lam.cells, sol[0])), S.n, S.p)


def _rows_from_supports(alphas, supports) -> tuple:
    rows = set()
    for a, supp in zip(alphas, supports):
        for b in supp:
            d = tuple(x - y for x, y in zip(a, b))
            if all(v >= 0 for v in d):
                continue  # b divides a: holds for every positive weight
            rows.add(d)
    return tuple(sorted(rows))


def realizability_system(lam: Staircase, S: DataSet) -> StrictInequalitySystem:
    """Rows ``alpha - beta`` for corner ``alpha`` and each ``beta`` in its normal form.

    Corners ``x_i^p`` are left out (``x_i^p - x_i`` leads with ``x_i^p`` under any
    order), as are rows where ``beta`` divides ``alpha``.
    """
    _check_size(lam, S)
    alphas = _box_corners(lam)
    sol = _normal_form_coeffs(alphas, lam, S) if alphas else []
    if sol is None:
        raise EnumerationError(f"staircase {lam} is not admissible for this data set")
    supports = [[c for c, v in zip(lam.cells, coeffs) if v] for coeffs in sol]
    return StrictInequalitySystem(S.n, _rows_from_supports(alphas, supports))


def reduced_gb_from_staircase(lam: Staircase, S: DataSet) -> ReducedGB:
    """The reduced basis whose standard monomials are ``lam``.

    Raises :class:`EnumerationError` if ``lam`` is not admissible or no term
    order realizes it.
    """
    _check_size(lam, S)
    n, p = S.n, S.p
    alphas = _box_corners(lam)
    sol = _normal_form_coeffs(alphas, lam, S) if alphas else []
    if sol is None:
        raise EnumerationError(f"staircase {lam} is not admissible for this data set")
    supports = [[c for c, v in zip(lam.cells, coeffs) if v] for coeffs in sol]
    ok, w = fm_feasible(StrictInequalitySystem(n, _rows_from_supports(alphas, supports)))
    if not ok:
        raise EnumerationError(f"no term order has standard monomials {lam}")
    gens = []
    for a, coeffs in zip(alphas, sol):
        tail = {c: -v for c, v in zip(lam.cells, coeffs) if v}
        gens.append((a, Polynomial({a: 1, **tail}, n, p)))
    for a in corners(lam):
        if max(a) == p:
            i = a.index(p)
            gens.append((a, Polynomial({a: 1, unit(n, i): -1}, n, p)))
    return ReducedGB(tuple(gens), TermOrder(w))


@dataclass
class GBEntry:
    basis: ReducedGB
    staircase: Staircase

    @property
    def leading_monomials(self) -> tuple:
        return self.basis.leading_monomials


@dataclass
class GBCollection:
    source: DataSet
    entries: list = field(default_factory=list)
    admissible: int = 0
    rejected: int = 0  # admissible staircases no term order realizes

    @property
    def bases(self) -> list:
        return [e.basis for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def enumerate_reduced_gbs(S: DataSet) -> GBCollection:
    """All reduced Gröbner bases of I(S), one per realizable staircase."""
    out = GBCollection(S)
    for lam in enumerate_staircases(S.n, S.p, S.m):
        if not is_admissible(lam, S):
            continue
        out.admissible += 1
        try:
            basis = reduced_gb_from_staircase(lam, S)
        except EnumerationError:
            out.rejected += 1
            continue
        out.entries.append(GBEntry(basis, lam))
    return out


class Counter:
    """Fast GB counting for one ambient space ``Z_p^n``.

    Keeps the evaluation table of all box monomials at all points, one scan
    plan per size, and memoized feasibility verdicts.
    """

    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.cells = box(n, p)
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.points = all_points(n, p)
        self.table = {pt: tuple(eval_monomial(c, pt, p) for c in self.cells) for pt in self.points}
        self._plans: dict = {}
        self._meta: dict = {}
        self._verdicts: dict = {}
        self._systems: dict = {}
        self.rejections = 0

    def plan(self, m: int):
        if m not in self._plans:
            stairs = enumerate_staircases(self.n, self.p, m)
            layout = []
            meta = []
            for lam in stairs:
                alphas = _box_corners(lam)
                layout.append(([self.index[c] for c in lam.cells], [self.index[a] for a in alphas]))
                meta.append((lam, alphas))
            self._plans[m] = kernels.make_plan(layout, len(self.cells))
            self._meta[m] = meta
        return self._plans[m]

    def _realizable(self, m: int, idx: int, masks: tuple) -> bool:
        key = (m, idx, masks)
        verdict = self._verdicts.get(key)
        if verdict is None:
            lam, alphas = self._meta[m][idx]
            supports = [[c for i, c in enumerate(lam.cells) if mask >> i & 1] for mask in masks]
            rows = _rows_from_supports(alphas, supports)
            verdict = self._systems.get(rows)
            if verdict is None:
                verdict = fm_feasible(StrictInequalitySystem(self.n, rows))[0]
                self._systems[rows] = verdict
            self._verdicts[key] = verdict
        return verdict

    def count(self, points) -> int:
        pts = [tuple(pt) for pt in points]
        m = len(pts)
        plan = self.plan(m)
        total = 0
        for idx, masks in kernels.scan(plan, [self.table[pt] for pt in pts], self.p):
            if self._realizable(m, idx, masks):
                total += 1
            else:
                self.rejections += 1
        return total


@lru_cache(maxsize=16)
def counter(n: int, p: int) -> Counter:
    return Counter(n, p)


def count_gbs(S: DataSet) -> int:
    """Number of distinct reduced Gröbner bases of I(S)."""
    return counter(S.n, S.p).count(S.points)


def subset_count(n: int, p: int, m: int) -> int:
    return comb(p ** n, m)
