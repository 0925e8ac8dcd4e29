"""Arithmetic in Z_p and dense linear algebra over it.

Elements are kept as least nonnegative residues. Matrices store plain ints
internally; :class:`FieldElement` exists for callers that want a checked
value type, the rest of the package works on ints mod ``p`` directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_PRIME = 257


class FieldError(ValueError):
    """Invalid field operation (mismatched moduli, bad modulus, ...)."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise FieldError(f"modulus must be prime, got {self.p!r}")
        if self.p > MAX_PRIME:
            raise FieldError(f"modulus {self.p} exceeds ceiling {MAX_PRIME}")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if isinstance(self.modulus, int):
            object.__setattr__(self, "modulus", PrimeModulus(self.modulus))
        object.__setattr__(self, "value", int(self.value) % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return FieldElement(other, self.modulus)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.modulus != self.modulus:
            raise FieldError(f"modulus mismatch: Z_{self.p} vs Z_{other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return fe_mul_inv(self) ** (-k)
        return FieldElement(pow(self.value, k, self.p), self.modulus)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * fe_mul_inv(other)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_mul_inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in Z_{a.p}")
    return FieldElement(inv_mod(a.value, a.p), a.modulus)


@lru_cache(maxsize=None)
def inverse_table(p: int) -> tuple:
    """Inverses of 0..p-1 (slot 0 holds 0)."""
    return (0,) + tuple(pow(a, p - 2, p) for a in range(1, p))


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in Z_{p}")
    return inverse_table(p)[a]


class MatrixGF:
    """Dense row-major matrix over Z_p with int entries in [0, p)."""

    __slots__ = ("p", "rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence[int]], p: int, cols: int | None = None):
        if not is_prime(p):
            raise FieldError(f"modulus must be prime, got {p}")
        rows = [tuple(int(v) % p for v in row) for row in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise FieldError("ragged matrix")
        self.p = p
        self.rows = len(rows)
        self.cols = cols
        self._data = tuple(rows)

    @classmethod
    def identity(cls, k: int, p: int) -> "MatrixGF":
        return cls([[int(i == j) for j in range(k)] for i in range(k)], p, cols=k)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "MatrixGF":
        return MatrixGF(zip(*self._data), self.p, cols=self.rows) if self.rows else MatrixGF([], self.p, cols=0)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.p != other.p:
            raise FieldError("modulus mismatch")
        if self.cols != other.rows:
            raise FieldError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        p = self.p
        cols_b = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = [[sum(a * b for a, b in zip(row, col)) % p for col in cols_b] for row in self._data]
        return MatrixGF(out, p, cols=other.cols)

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and self.p == other.p
                and self.cols == other.cols and self._data == other._data)

    def __hash__(self):
        return hash((self.p, self.cols, self._data))

    def __repr__(self):
        return f"MatrixGF({self.tolist()}, p={self.p})"


def row_reduce(M: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns.

    Pivots are chosen column by column, taking the first row at or below the
    current one with a nonzero entry, so the result is reproducible.
    """
    p = M.p
    inv = inverse_table(p)
    A = M.tolist()
    r = 0
    pivots = []
    for c in range(M.cols):
        piv = next((i for i in range(r, M.rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = inv[A[r][c]]
        A[r] = [v * s % p for v in A[r]]
        for i in range(M.rows):
            f = A[i][c]
            if i != r and f:
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return MatrixGF(A, p, cols=M.cols), r, pivots


def rank(M: MatrixGF) -> int:
    return row_reduce(M)[1]


INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"


def solve_linear(M: MatrixGF, b: Sequence[int]):
    """Solve ``M x = b``.

    Returns the unique solution as a list of ints, or one of the tags
    :data:`INCONSISTENT` / :data:`UNDERDETERMINED`.
    """
    b = [int(v) for v in b]
    if len(b) != M.rows:
        raise FieldError(f"right-hand side has length {len(b)}, expected {M.rows}")
    aug = MatrixGF([list(row) + [v] for row, v in zip(M.tolist(), b)], M.p, cols=M.cols + 1)
    R, _, pivots = row_reduce(aug)
    if M.cols in pivots:
        return INCONSISTENT
    if len(pivots) < M.cols:
        return UNDERDETERMINED
    return [R[i, M.cols] for i in range(M.cols)]


def inverse(M: MatrixGF) -> MatrixGF:
    if M.rows != M.cols:
        raise FieldError("inverse of a non-square matrix")
    k = M.rows
    aug = MatrixGF([list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(M.tolist())],
                   M.p, cols=2 * k)
    R, _, pivots = row_reduce(aug)
    if pivots[:k] != list(range(k)):
        raise ZeroDivisionError("matrix is singular")
    return MatrixGF([[R[i, k + j] for j in range(k)] for i in range(k)], M.p, cols=k)
