"""Closed-form GB counts for two and three points, and upper bounds on the count."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class FormulaError(ValueError):
    pass


def b0(x: int) -> int:
    if x < 0:
        raise FormulaError(f"b0 is defined for x >= 0, got {x}")
    return 1 if x == 0 else 0


def b1(x: int) -> int:
    """1 at x == 1, 0 for every larger x."""
    if x <= 0:
        raise FormulaError(f"b1 is defined for x >= 1, got {x}")
    return 1 if x == 1 else 0


def b2(x: int) -> int:
    return max(x, 0)


def _check_pair(P, Q):
    if len(P) != len(Q):
        raise FormulaError(f"points {P} and {Q} have different dimensions")


def n2_count(P, Q) -> int:
    """Number of reduced GBs of the ideal of two distinct points: n minus agreeing coordinates."""
    _check_pair(P, Q)
    if tuple(P) == tuple(Q):
        raise FormulaError("the two points coincide")
    return len(P) - sum(b0(abs(a - b)) for a, b in zip(P, Q))


def _three(P, Q, R, n: int, p: int | None):
    pts = [tuple(P), tuple(Q), tuple(R)]
    if len(set(pts)) != 3:
        raise FormulaError("three distinct points are required")
    for pt in pts:
        if len(pt) != n:
            raise FormulaError(f"formula is for points in Z_2^{n}, got {pt}")
        if any(v not in (0, 1) for v in pt):
            raise FormulaError(f"formula is for Boolean coordinates, got {pt}")
    return n2_count(pts[0], pts[1]), n2_count(pts[0], pts[2]), n2_count(pts[1], pts[2])


def n3_count_2d(P, Q, R) -> int:
    s = _three(P, Q, R, 2, 2)
    return 2 - b2(sum(b1(v) for v in s) - 1)


def n3_count_3d(P, Q, R) -> int:
    w = _three(P, Q, R, 3, 2)
    return 3 - sum(b1(v) for v in w)


def iroot(x: int, k: int) -> int:
    """Largest integer r with r**k <= x."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def round_power(base: int, exponent: Fraction) -> int:
    """``base ** exponent`` rounded to the nearest integer, computed exactly.

    For integer base and rational exponent the value is an integer or
    irrational, so there is never a tie to break.
    """
    exponent = Fraction(exponent)
    if base < 0 or exponent < 0:
        raise ValueError("nonnegative base and exponent required")
    a, c = exponent.numerator, exponent.denominator
    target = base ** a
    k = iroot(target, c)
    if k ** c == target:
        return k
    return k + 1 if (2 * k + 1) ** c < 2 ** c * target else k


def onn_bound(n: int, m: int) -> int:
    """Bound ``m^(2n(n-1)/(n+1))`` valid over any field, rounded to nearest; 1 at m = 0."""
    if n < 1 or m < 0:
        raise FormulaError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if m == 0:
        return 1
    return round_power(m, Fraction(2 * n * (n - 1), n + 1))


def _finite_field_base(m: int, p: int) -> int:
    return p * p * (m // p) + (m % p) ** 2


def modified_bound(n: int, m: int, p: int) -> int:
    """Bound specialized to ``m`` points of Z_p^n; symmetric under m -> p^n - m."""
    total = p ** n
    if not 0 <= m <= total:
        raise FormulaError(f"m={m} outside 0..{total}")
    if m == 0 or m == total:
        return 1
    if m > total // 2:
        m = total - m
    return round_power(_finite_field_base(m, p), Fraction(n * (n - 1), n + 1))


def max_coordinate_sum(m: int, p: int) -> int:
    """Largest coordinate sum of an m-cell staircase when each axis holds at most p cells."""
    if m < 0 or p < 2:
        raise FormulaError(f"need m >= 0 and p >= 2, got m={m}, p={p}")
    return p * (p - 1) // 2 * (m // p) + comb(m % p, 2)


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    p: int
    original_bound: int
    modified_bound: int
    actual_max: int | None = None


def bound_report(n: int, m: int, p: int, actual_max: int | None = None) -> BoundReport:
    return BoundReport(n, m, p, onn_bound(n, m), modified_bound(n, m, p), actual_max)


def formula_count(points, n: int, p: int) -> int:
    """Closed-form count for 2 points (any space) or 3 points in Z_2^2 / Z_2^3."""
    pts = [tuple(pt) for pt in points]
    if len(pts) == 2:
        return n2_count(*pts)
    if len(pts) == 3 and p == 2 and n == 2:
        return n3_count_2d(*pts)
    if len(pts) == 3 and p == 2 and n == 3:
        return n3_count_3d(*pts)
    raise FormulaError(
        f"no closed-form count for {len(pts)} points in Z_{p}^{n}: formulas exist for 2 points "
        "and for 3 points in Z_2^2 or Z_2^3; beyond that they are hard to generate")
