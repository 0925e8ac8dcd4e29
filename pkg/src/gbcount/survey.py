"""Exhaustive and sampled surveys of the maximum GB count per set size."""
from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .enumeration import counter
from .formulas import modified_bound, onn_bound
from .ideal import all_points
from .reference_tables import compare_row

DEFAULT_BUDGET = 10 ** 6
CSV_HEADER = ("m", "actual_max", "original_bound", "modified_bound", "witness")


class BudgetExceeded(RuntimeError):
    pass


class InvariantViolation(RuntimeError):
    pass


@dataclass
class SurveyRow:
    m: int
    actual_max: int
    original_bound: int
    modified_bound: int
    witness: tuple
    exact: bool = True
    subsets: int = 0
    rejections: int = 0

    def as_dict(self) -> dict:
        return {"m": self.m, "actual_max": self.actual_max,
                "original_bound": self.original_bound, "modified_bound": self.modified_bound,
                "witness": [list(pt) for pt in self.witness], "exact": self.exact,
                "subsets": self.subsets}


@dataclass
class Survey:
    p: int
    n: int
    rows: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)

    def row(self, m: int) -> SurveyRow:
        return next(r for r in self.rows if r.m == m)

    @property
    def actual_max(self) -> dict:
        return {r.m: r.actual_max for r in self.rows}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.m, r.actual_max, r.original_bound, r.modified_bound, format_witness(r.witness)])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"p": self.p, "n": self.n, "rows": [r.as_dict() for r in self.rows]}
        if self.discrepancies:
            doc["discrepancies"] = self.discrepancies
        return json.dumps(doc, indent=2) + "\n"


def format_witness(points) -> str:
    return ";".join(" ".join(map(str, pt)) for pt in points)


def _tasks(N: int, m: int):
    """Split size-m subsets of range(N) by their two smallest elements, in lexicographic order."""
    if m < 2:
        return [(m, ())]
    return [(m, (a, b)) for a in range(N) for b in range(a + 1, N) if N - b - 1 >= m - 2]


def _scan_chunk(args):
    n, p, task = args
    m, prefix = task
    ctr = counter(n, p)
    pts = all_points(n, p)
    before = ctr.rejections
    best, witness = -1, None
    if prefix:
        head = tuple(pts[i] for i in prefix)
        subsets = (head + rest for rest in combinations(pts[prefix[-1] + 1:], m - len(prefix)))
    else:
        subsets = combinations(pts, m)
    for S in subsets:
        c = ctr.count(S)
        if c > best:
            best, witness = c, S
    return best, witness, ctr.rejections - before


def survey_row(n: int, p: int, m: int, jobs: int = 1, sample: int | None = None,
               seed: int = 0, budget: int = DEFAULT_BUDGET) -> SurveyRow:
    """Maximum GB count over subsets of size ``m``.

    Exact mode visits every subset in lexicographic order and keeps the first
    maximizer. With ``sample`` it draws that many uniform random subsets and the
    maximum is only a lower bound.
    """
    total = comb(p ** n, m)
    if sample is None:
        if total > budget:
            raise BudgetExceeded(
                f"C({p ** n}, {m}) = {total} subsets exceeds the enumeration budget of {budget}; "
                "raise --budget or use --sample")
        tasks = [(n, p, t) for t in _tasks(p ** n, m)]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(jobs) as ex:
                results = list(ex.map(_scan_chunk, tasks, chunksize=8))
        else:
            results = [_scan_chunk(t) for t in tasks]
        best, witness = -1, None
        for b, w, _ in results:
            if b > best:
                best, witness = b, w
        rejections = sum(r for *_, r in results)
        exact, visited = True, total
    else:
        rng = random.Random(seed)
        pts = all_points(n, p)
        ctr = counter(n, p)
        before = ctr.rejections
        best, witness = -1, None
        for _ in range(sample):
            S = tuple(sorted(rng.sample(pts, m)))
            c = ctr.count(S)
            if c > best or (c == best and S < witness):
                best, witness = c, S
        rejections = ctr.rejections - before
        exact, visited = False, sample
    return SurveyRow(m, best, onn_bound(n, m), modified_bound(n, m, p), tuple(witness),
                     exact, visited, rejections)


def run_survey(n: int, p: int, ms=None, jobs: int = 1, sample: int | None = None, seed: int = 0,
               budget: int = DEFAULT_BUDGET, compare: bool = False, check: bool = True) -> Survey:
    """One row per ``m``; raises :class:`InvariantViolation` if a row breaks the bound
    or complementary sizes disagree."""
    ms = list(range(p ** n + 1)) if ms is None else list(ms)
    out = Survey(p, n)
    for m in ms:
        row = survey_row(n, p, m, jobs=jobs, sample=sample, seed=seed, budget=budget)
        out.rows.append(row)
        if compare:
            out.discrepancies.extend(compare_row(p, n, m, {
                "actual_max": row.actual_max, "original_bound": row.original_bound,
                "modified_bound": row.modified_bound}))
    if check:
        check_invariants(out)
    return out


def check_invariants(s: Survey):
    by_m = {r.m: r for r in s.rows}
    total = s.p ** s.n
    for r in s.rows:
        if r.actual_max > r.modified_bound:
            raise InvariantViolation(
                f"m={r.m}: {r.actual_max} GBs exceeds the modified bound {r.modified_bound}")
        other = by_m.get(total - r.m)
        if other is not None and r.exact and other.exact and other.actual_max != r.actual_max:
            raise InvariantViolation(
                f"m={r.m} and m={other.m} have different maxima ({r.actual_max} vs {other.actual_max})")
