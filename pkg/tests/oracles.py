"""Independent reference computations used only by the test suite."""
from functools import lru_cache
from itertools import combinations, permutations, product

from gbcount.ideal import DataSet, buchberger_moller
from gbcount.polynomial import TermOrder


@lru_cache(maxsize=None)
def distinct_orders(n: int, p: int, wmax: int = 16) -> tuple:
    """One representative per distinct ordering of {0..p}^n over weights {1..wmax}^n x tiebreaks.

    Buchberger-Moller never looks past exponent p, so orders that agree on
    that box give identical output.
    """
    cells = list(product(range(p + 1), repeat=n))
    seen = {}
    for tb in permutations(range(n)):
        for w in product(range(1, wmax + 1), repeat=n):
            order = TermOrder(w, tb)
            seen.setdefault(tuple(sorted(cells, key=order.key)), order)
    return tuple(seen.values())


def bm_sweep(S: DataSet, wmax: int = 16) -> set:
    return {buchberger_moller(S, o)[0] for o in distinct_orders(S.n, S.p, wmax)}


def brute_staircases(n: int, p: int, m: int) -> set:
    """Divisibility-closed m-subsets of the box, by filtering every subset."""
    cells = list(product(range(p), repeat=n))
    out = set()
    for sub in combinations(cells, m):
        s = set(sub)
        if all(c[:i] + (c[i] - 1,) + c[i + 1:] in s for c in sub for i in range(n) if c[i]):
            out.add(tuple(sorted(sub)))
    return out


def det_mod(M, p: int) -> int:
    """Determinant by cofactor expansion."""
    k = len(M)
    if k == 0:
        return 1
    total = 0
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * det_mod(minor, p)
    return total % p


def rank_by_minors(M, p: int) -> int:
    """Largest k with a nonzero k x k minor."""
    r, c = len(M), len(M[0]) if M else 0
    for k in range(min(r, c), 0, -1):
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                if det_mod([[M[i][j] for j in cols] for i in rows], p):
                    return k
    return 0


def subsets(n: int, p: int, max_m=None):
    pts = list(product(range(p), repeat=n))
    top = len(pts) if max_m is None else max_m
    for m in range(top + 1):
        for sub in combinations(pts, m):
            yield DataSet(p, n, sub)
