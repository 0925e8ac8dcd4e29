"""Ideals of finite point sets in Z_p^n."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .ff import MatrixGF, PrimeModulus, inverse_table
from .polynomial import (Polynomial, ReducedGB, TermOrder, buchberger, divides,
                         field_polynomials, mono_mul, unit)

Point = tuple


class DataError(ValueError):
    """Malformed point data (bad coordinates, duplicates, conflicting outputs)."""


@dataclass(frozen=True)
class DataSet:
    """Distinct points of Z_p^n, kept in sorted order."""

    p: int
    n: int
    points: tuple = ()

    def __post_init__(self):
        PrimeModulus(self.p)
        if self.n < 1:
            raise DataError(f"need at least one variable, got n={self.n}")
        pts = []
        for pt in self.points:
            pt = tuple(int(x) for x in pt)
            if len(pt) != self.n:
                raise DataError(f"point {pt} does not have {self.n} coordinates")
            if any(not 0 <= x < self.p for x in pt):
                raise DataError(f"point {pt} has coordinates outside 0..{self.p - 1}")
            pts.append(pt)
        if len(set(pts)) != len(pts):
            raise DataError("duplicate points")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @property
    def m(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt):
        return tuple(pt) in self.points

    def complement(self) -> "DataSet":
        taken = set(self.points)
        return DataSet(self.p, self.n, [q for q in all_points(self.n, self.p) if q not in taken])

    def union(self, extra: Iterable[Point]) -> "DataSet":
        return DataSet(self.p, self.n, list(self.points) + [tuple(q) for q in extra])

    def to_text(self) -> str:
        lines = [f"{self.p} {self.n}"] + [" ".join(map(str, pt)) for pt in self.points]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "DataSet":
        rows = _data_lines(text)
        if not rows:
            raise DataError("empty input: expected a 'p n' header line")
        (lineno, head), body = rows[0], rows[1:]
        if len(head) != 2:
            raise DataError(f"line {lineno}: header must be 'p n'")
        p, n = head
        try:
            PrimeModulus(p)
        except ValueError as e:
            raise DataError(f"line {lineno}: {e}") from None
        seen = set()
        for ln, vals in body:
            if len(vals) != n:
                raise DataError(f"line {ln}: expected {n} coordinates, got {len(vals)}")
            if any(not 0 <= v < p for v in vals):
                raise DataError(f"line {ln}: coordinate out of range 0..{p - 1}")
            if tuple(vals) in seen:
                raise DataError(f"line {ln}: duplicate point {tuple(vals)}")
            seen.add(tuple(vals))
        return cls(p, n, [tuple(v) for _, v in body])


def _data_lines(text: str) -> list:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append((lineno, [int(t) for t in line.split()]))
        except ValueError:
            raise DataError(f"line {lineno}: expected integers, got {line!r}") from None
    return rows


def all_points(n: int, p: int) -> list:
    return list(product(range(p), repeat=n))


def eval_monomial(mono, point, p: int) -> int:
    v = 1
    for x, e in zip(point, mono):
        if e:
            v = v * pow(x, e, p) % p
    return v


def evaluation_matrix(mons: Sequence, S: DataSet) -> MatrixGF:
    """Row i, column j holds ``mons[j]`` evaluated at the i-th point."""
    for mono in mons:
        if any(e >= S.p for e in mono):
            raise ValueError(f"monomial {mono} has an exponent >= p={S.p}; reduce with x^p = x first")
    return MatrixGF([[eval_monomial(mono, pt, S.p) for mono in mons] for pt in S.points], S.p,
                    cols=len(mons))


def ideal_membership(f: Polynomial, S: DataSet) -> bool:
    return all(f(pt) == 0 for pt in S.points)


def buchberger_moller(S: DataSet, order: TermOrder):
    """Reduced Gröbner basis of I(S) and its standard monomials.

    Monomials are visited in increasing order starting from 1. Each one's
    evaluation vector is reduced against those of the standard monomials found
    so far; a dependency yields a basis element, otherwise the monomial is
    standard and its multiples by each variable become candidates.
    """
    p, n = S.p, S.n
    inv = inverse_table(p)
    pts = S.points
    key = order.key
    basis = []  # (vector, pivot, combination) with vector[pivot] == 1
    standard = []
    gens = []
    leads = []
    one = (0,) * n
    heap = [(key(one), one)]
    seen = {one}
    while heap:
        _, t = heapq.heappop(heap)
        if any(divides(lm, t) for lm in leads):
            continue
        vec = [eval_monomial(t, pt, p) for pt in pts]
        comb = {t: 1}
        for bvec, piv, bcomb in basis:
            f = vec[piv]
            if f:
                vec = [(a - f * b) % p for a, b in zip(vec, bvec)]
                for mono, c in bcomb.items():
                    comb[mono] = (comb.get(mono, 0) - f * c) % p
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            leads.append(t)
            gens.append(Polynomial(comb, n, p))
            continue
        s = inv[vec[piv]]
        basis.append(([v * s % p for v in vec], piv, {mono: c * s % p for mono, c in comb.items()}))
        standard.append(t)
        for i in range(n):
            u = mono_mul(t, unit(n, i))
            if u not in seen:
                seen.add(u)
                heapq.heappush(heap, (key(u), u))
    return ReducedGB(tuple(zip(leads, gens)), order), standard


def intersection_generators(S: DataSet) -> list[Polynomial]:
    """Generators of I(S) as a product of the points' maximal ideals, plus field polynomials.

    Distinct points have pairwise comaximal ideals, so the intersection equals
    the product. Exponential in ``m``; meant as an independent check only.
    """
    n, p = S.n, S.p
    gens = [Polynomial.constant(1, n, p)]
    for pt in S.points:
        linear = [Polynomial.var(j, n, p) - pt[j] for j in range(n)]
        gens = list({g * l for g in gens for l in linear})
    return gens + field_polynomials(n, p)


def ideal_by_intersection(S: DataSet, order: TermOrder) -> ReducedGB:
    """Reduced GB of I(S) built one point at a time with Buchberger's algorithm.

    ``I(S + q) = I(S) * <x_j - q_j>`` for ``q`` outside S; the running basis is
    reduced after each product to keep the generator count small.
    """
    n, p = S.n, S.p
    fields = field_polynomials(n, p)
    G = [Polynomial.constant(1, n, p)]
    for pt in S.points:
        linear = [Polynomial.var(j, n, p) - pt[j] for j in range(n)]
        G = buchberger([g * l for g in G for l in linear] + fields, order).polys
    return buchberger(G + fields, order)


def indicator(point: Point, p: int) -> Polynomial:
    """The polynomial equal to 1 at ``point`` and 0 elsewhere on Z_p^n."""
    n = len(point)
    f = Polynomial.constant(1, n, p)
    for j, s in enumerate(point):
        f = f * (1 - (Polynomial.var(j, n, p) - s) ** (p - 1))
    return f


def interpolate(pairs: Sequence, p: int, n: int | None = None) -> Polynomial:
    """A polynomial with exponents below ``p`` taking value ``t`` at each input ``s``.

    ``pairs`` is a sequence of ``(s, t)``; repeated inputs must agree.
    """
    table: dict = {}
    for s, t in pairs:
        s = tuple(int(x) for x in s)
        t = int(t) % p
        if table.setdefault(s, t) != t:
            raise DataError(f"input {s} has conflicting outputs {table[s]} and {t}")
    if n is None:
        if not table:
            raise DataError("cannot infer n from empty data")
        n = len(next(iter(table)))
    f = Polynomial.zero(n, p)
    for s, t in table.items():
        if t:
            f = f + indicator(s, p).scale(t)
    return f
