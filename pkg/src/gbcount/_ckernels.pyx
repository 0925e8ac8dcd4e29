# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled staircase scan; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    MAX_MASK_BITS = 63


cdef class Plan:
    cdef int count
    cdef int N
    cdef int m
    cdef int kmax
    cdef int *lam       # count * m
    cdef int *cor_off   # count + 1
    cdef int *cor       # flat corner columns
    cdef object py_stairs

    def __cinit__(self):
        self.lam = NULL
        self.cor_off = NULL
        self.cor = NULL

    def __dealloc__(self):
        free(self.lam)
        free(self.cor_off)
        free(self.cor)

    def __len__(self):
        return self.count

    def __getitem__(self, i):
        return self.py_stairs[i]

    def __reduce__(self):
        return (make_plan, (self.py_stairs, self.N))


def make_plan(stairs, int N):
    cdef Plan plan = Plan()
    stairs = [(tuple(l), tuple(c)) for l, c in stairs]
    plan.py_stairs = stairs
    plan.count = len(stairs)
    plan.N = N
    plan.m = len(stairs[0][0]) if stairs else 0
    total = sum(len(c) for _, c in stairs)
    plan.lam = <int *> malloc(max(1, plan.count * plan.m) * sizeof(int))
    plan.cor_off = <int *> malloc((plan.count + 1) * sizeof(int))
    plan.cor = <int *> malloc(max(1, total) * sizeof(int))
    if plan.lam == NULL or plan.cor_off == NULL or plan.cor == NULL:
        raise MemoryError()
    cdef int s, i, pos = 0
    plan.kmax = 0
    for s in range(plan.count):
        lam, cor = stairs[s]
        if len(lam) != plan.m:
            raise ValueError("all staircases in a plan must have the same size")
        for i in range(plan.m):
            if not 0 <= lam[i] < N:
                raise ValueError("cell index out of range")
            plan.lam[s * plan.m + i] = lam[i]
        plan.cor_off[s] = pos
        for i in range(len(cor)):
            if not 0 <= cor[i] < N:
                raise ValueError("corner index out of range")
            plan.cor[pos] = cor[i]
            pos += 1
        if len(cor) > plan.kmax:
            plan.kmax = len(cor)
    plan.cor_off[plan.count] = pos
    return plan


cdef int _reduce(int *A, int m, int width, int p, int *inv) nogil:
    """Gauss-Jordan on the leading m x m block; 0 if singular."""
    cdef int c, i, j, piv, f, s
    cdef int *rc
    cdef int *ri
    for c in range(m):
        piv = -1
        for i in range(c, m):
            if A[i * width + c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            for j in range(width):
                f = A[c * width + j]
                A[c * width + j] = A[piv * width + j]
                A[piv * width + j] = f
        rc = A + c * width
        s = inv[rc[c]]
        if s != 1:
            for j in range(c, width):
                rc[j] = rc[j] * s % p
        for i in range(m):
            if i == c:
                continue
            ri = A + i * width
            f = ri[c]
            if f != 0:
                for j in range(c, width):
                    ri[j] = (ri[j] + (p - f) * rc[j]) % p
    return 1


cdef int _reduce_gf2(unsigned long long *A, int m) nogil:
    cdef int c, i, piv
    cdef unsigned long long bit, t
    for c in range(m):
        bit = (<unsigned long long> 1) << c
        piv = -1
        for i in range(c, m):
            if A[i] & bit:
                piv = i
                break
        if piv < 0:
            return 0
        t = A[c]; A[c] = A[piv]; A[piv] = t
        for i in range(m):
            if i != c and (A[i] & bit):
                A[i] ^= A[c]
    return 1


def scan(Plan plan, rows, int p):
    cdef int m = plan.m
    cdef int N = plan.N
    cdef int s, i, j, k, off, width, ok
    cdef unsigned long long mask
    if len(rows) != m:
        raise ValueError(f"{len(rows)} points but plan has staircases of size {m}")
    width = m + plan.kmax
    use_bits = p == 2 and width <= MAX_MASK_BITS
    if m > MAX_MASK_BITS:
        from . import _kernels_py
        return _kernels_py.scan(plan.py_stairs, rows, p)
    cdef int *table = <int *> malloc(max(1, m * N) * sizeof(int))
    cdef int *A = <int *> malloc(max(1, m * width) * sizeof(int))
    cdef unsigned long long *B = <unsigned long long *> malloc(max(1, m) * sizeof(unsigned long long))
    cdef int *inv = <int *> malloc(p * sizeof(int))
    if table == NULL or A == NULL or B == NULL or inv == NULL:
        free(table); free(A); free(B); free(inv)
        raise MemoryError()
    out = []
    try:
        for i in range(m):
            r = rows[i]
            for j in range(N):
                table[i * N + j] = r[j]
        inv[0] = 0
        for i in range(1, p):
            inv[i] = pow(i, p - 2, p)
        for s in range(plan.count):
            off = plan.cor_off[s]
            k = plan.cor_off[s + 1] - off
            if use_bits:
                for i in range(m):
                    mask = 0
                    for j in range(m):
                        if table[i * N + plan.lam[s * m + j]]:
                            mask |= (<unsigned long long> 1) << j
                    for j in range(k):
                        if table[i * N + plan.cor[off + j]]:
                            mask |= (<unsigned long long> 1) << (m + j)
                    B[i] = mask
                ok = _reduce_gf2(B, m)
                if not ok:
                    continue
                masks = []
                for j in range(k):
                    mask = 0
                    for i in range(m):
                        if (B[i] >> (m + j)) & 1:
                            mask |= (<unsigned long long> 1) << i
                    masks.append(mask)
            else:
                width = m + k
                for i in range(m):
                    for j in range(m):
                        A[i * width + j] = table[i * N + plan.lam[s * m + j]]
                    for j in range(k):
                        A[i * width + m + j] = table[i * N + plan.cor[off + j]]
                ok = _reduce(A, m, width, p, inv)
                if not ok:
                    continue
                masks = []
                for j in range(k):
                    mask = 0
                    for i in range(m):
                        if A[i * width + m + j] != 0:
                            mask |= (<unsigned long long> 1) << i
                    masks.append(mask)
            out.append((s, tuple(masks)))
    finally:
        free(table); free(A); free(B); free(inv)
    return out
