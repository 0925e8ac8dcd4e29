"""Lattice geometry of point sets and its relation to GB counts."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .enumeration import count_gbs, counter
from .ideal import DataSet, all_points
from .linineq import in_convex_hull

MAX_CONJECTURE_POINTS = 32
LINK_MODES = ("exists", "forall")


class GeometryError(ValueError):
    pass


def coordinate_changes(P, Q) -> int:
    if len(P) != len(Q):
        raise GeometryError(f"points {P} and {Q} have different dimensions")
    return sum(1 for a, b in zip(P, Q) if a != b)


def is_linked(q, S: DataSet, mode: str = "exists") -> bool:
    """Whether ``q`` lies on an axis-parallel grid line through a point of S.

    ``mode="forall"`` demands a shared grid line with every point of S instead.
    """
    q = tuple(q)
    if q in S:
        raise GeometryError(f"{q} is already in the data set")
    if mode not in LINK_MODES:
        raise GeometryError(f"mode must be one of {LINK_MODES}")
    test = any if mode == "exists" else all
    return test(coordinate_changes(q, s) <= 1 for s in S.points)


def hull_holes(T: DataSet) -> list:
    """Lattice points of the box inside conv(T) that are not in T."""
    if not T.points:
        return []
    lo = [min(c) for c in zip(*T.points)]
    hi = [max(c) for c in zip(*T.points)]
    members = set(T.points)
    holes = []
    for q in all_points(T.n, T.p):
        if q in members or any(not a <= x <= b for x, a, b in zip(q, lo, hi)):
            continue
        if in_convex_hull(q, T.points):
            holes.append(q)
    return holes


@dataclass
class Violation:
    base: tuple
    added: tuple
    base_count: int
    new_count: int


@dataclass
class ConjectureReport:
    """Outcome of testing whether adding a linked point without hull holes never raises the count."""

    p: int
    n: int
    max_m: int
    mode: str = "exists"
    sets_examined: int = 0
    candidates_tested: int = 0
    skipped_unlinked: int = 0
    skipped_holes: int = 0
    violations: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "p": self.p, "n": self.n, "max_m": self.max_m, "mode": self.mode,
            "sets_examined": self.sets_examined,
            "candidates_tested": self.candidates_tested,
            "skipped_unlinked": self.skipped_unlinked,
            "skipped_holes": self.skipped_holes,
            "violation_count": len(self.violations),
            "violations": [
                {"base": [list(x) for x in v.base], "added": list(v.added),
                 "base_count": v.base_count, "new_count": v.new_count}
                for v in self.violations
            ],
        }


def check_conjecture(p: int, n: int, max_m: int, mode: str = "exists") -> ConjectureReport:
    """Exhaustively test every nonempty S with ``|S| <= max_m`` and every admissible q."""
    if p ** n > MAX_CONJECTURE_POINTS:
        raise GeometryError(
            f"Z_{p}^{n} has {p ** n} points; exhaustive checking is limited to "
            f"{MAX_CONJECTURE_POINTS} (sample instead)")
    report = ConjectureReport(p, n, max_m, mode)
    ctr = counter(n, p)
    pts = all_points(n, p)
    for m in range(1, min(max_m, len(pts)) + 1):
        for base in combinations(pts, m):
            S = DataSet(p, n, base)
            report.sets_examined += 1
            base_count = ctr.count(base)
            for q in pts:
                if q in S:
                    continue
                if not is_linked(q, S, mode):
                    report.skipped_unlinked += 1
                    continue
                T = S.union([q])
                if hull_holes(T):
                    report.skipped_holes += 1
                    continue
                report.candidates_tested += 1
                new_count = ctr.count(T.points)
                if new_count > base_count:
                    report.violations.append(Violation(base, q, base_count, new_count))
    return report


@dataclass(frozen=True)
class AugmentationResult:
    base_set: DataSet
    added_points: tuple
    final_count: int

    @property
    def unique_size(self) -> int:
        return self.base_set.m + len(self.added_points)


def find_unique_augmentation(S: DataSet, budget: int):
    """Smallest set of extra points giving a unique reduced GB, or None within ``budget``.

    Sizes are tried in increasing order and, within a size, candidate sets in
    lexicographic order of the remaining points.
    """
    if budget < 0:
        raise GeometryError("budget must be nonnegative")
    ctr = counter(S.n, S.p)
    rest = [q for q in all_points(S.n, S.p) if q not in S]
    for k in range(min(budget, len(rest)) + 1):
        for extra in combinations(rest, k):
            T = S.union(extra)
            if ctr.count(T.points) == 1:
                return AugmentationResult(S, extra, 1)
    return None


def pair_counts_match_changes(n: int, p: int) -> bool:
    """Whether every pair in Z_p^n has as many GBs as coordinate changes."""
    for P, Q in combinations(all_points(n, p), 2):
        if count_gbs(DataSet(p, n, [P, Q])) != coordinate_changes(P, Q):
            return False
    return True
