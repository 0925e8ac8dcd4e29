"""Multivariate polynomials over Z_p, term orders and Buchberger's algorithm.

Monomials are plain tuples of exponents. A :class:`TermOrder` compares them
by a nonnegative weight vector first and breaks ties lexicographically along
a permutation of the variables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .ff import inverse_table, is_prime

Monomial = tuple

LESS, EQUAL, GREATER = -1, 0, 1


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit(n: int, i: int, e: int = 1) -> Monomial:
    return tuple(e if j == i else 0 for j in range(n))


class OrderError(ValueError):
    pass


@dataclass(frozen=True)
class TermOrder:
    """Weight vector with a lexicographic tiebreak.

    ``tiebreak`` is a permutation of ``range(n)``; the variable listed first is
    compared first when weights tie. Weights may be ints or Fractions.
    """

    weights: tuple
    tiebreak: tuple = None

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        if any(x < 0 for x in w):
            raise OrderError(f"weights must be nonnegative: {self.weights}")
        if all(x.denominator == 1 for x in w):
            w = tuple(int(x) for x in w)
        object.__setattr__(self, "weights", w)
        tb = tuple(range(len(w))) if self.tiebreak is None else tuple(self.tiebreak)
        if sorted(tb) != list(range(len(w))):
            raise OrderError(f"tiebreak must permute range({len(w)}): {self.tiebreak}")
        object.__setattr__(self, "tiebreak", tb)

    @classmethod
    def grlex(cls, n: int) -> "TermOrder":
        return cls((1,) * n)

    @classmethod
    def lex(cls, n: int, tiebreak=None) -> "TermOrder":
        return cls((0,) * n, tiebreak)

    @property
    def n(self) -> int:
        return len(self.weights)

    def key(self, a: Monomial):
        if len(a) != len(self.weights):
            raise OrderError(f"monomial {a} has {len(a)} variables, order has {len(self.weights)}")
        return (sum(w * e for w, e in zip(self.weights, a)),) + tuple(a[i] for i in self.tiebreak)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    return order.compare(a, b)


class Polynomial:
    """Sparse polynomial in ``n`` variables over Z_p.

    ``terms`` maps exponent tuples to nonzero residues. Instances are treated
    as immutable.
    """

    __slots__ = ("n", "p", "terms", "_hash")

    def __init__(self, terms: dict | Iterable = (), n: int | None = None, p: int = 2):
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            c = (clean.get(mono, 0) + int(c)) % p
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        if n is None:
            if not clean:
                raise ValueError("n is required for the zero polynomial")
            n = len(next(iter(clean)))
        if any(len(mono) != n for mono in clean):
            raise ValueError(f"monomial arity differs from n={n}")
        self.n = n
        self.p = p
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, n: int, p: int) -> "Polynomial":
        return cls({}, n, p)

    @classmethod
    def constant(cls, c: int, n: int, p: int) -> "Polynomial":
        return cls({(0,) * n: c}, n, p)

    @classmethod
    def monomial(cls, mono: Monomial, p: int, c: int = 1) -> "Polynomial":
        return cls({tuple(mono): c}, len(mono), p)

    @classmethod
    def var(cls, i: int, n: int, p: int) -> "Polynomial":
        return cls({unit(n, i): 1}, n, p)

    def _same_ring(self, other: "Polynomial"):
        if (self.n, self.p) != (other.n, other.p):
            raise ValueError(f"ring mismatch: ({self.n}, {self.p}) vs ({other.n}, {other.p})")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(other, self.n, self.p)
        self._same_ring(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out, self.n, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.n, self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._same_ring(other)
        out: dict = {}
        p = self.p
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial(out, self.n, p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(1, self.n, self.p)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> "Polynomial":
        return Polynomial({m: v * c for m, v in self.terms.items()}, self.n, self.p)

    def shift(self, mono: Monomial, c: int = 1) -> "Polynomial":
        """``c * x^mono * self``."""
        return Polynomial({mono_mul(m, mono): v * c for m, v in self.terms.items()}, self.n, self.p)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.n, self.p)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.n, self.p) == (other.n, other.p) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.p, frozenset(self.terms.items())))
        return self._hash

    @property
    def support(self) -> list:
        return sorted(self.terms)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, point: Sequence[int]) -> int:
        p = self.p
        total = 0
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v = v * pow(int(x), e, p)
            total += v
        return total % p

    evaluate = __call__

    def reduce_field(self) -> "Polynomial":
        """Rewrite with ``x^p = x`` so every exponent is at most ``p - 1``."""
        p = self.p

        def fold(e):
            return e if e < p else (e - 1) % (p - 1) + 1

        return Polynomial([(tuple(fold(e) for e in m), c) for m, c in self.terms.items()], self.n, p)

    def leading_term(self, order: TermOrder) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def monic(self, order: TermOrder) -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(inverse_table(self.p)[c])

    def render(self, order: TermOrder | None = None, lead: Monomial | None = None,
               mark_lead: bool = False) -> str:
        """Text form: terms descending by ``order`` (graded lex if omitted).

        ``lead`` forces that monomial first; ``mark_lead`` prefixes it with ``*``.
        """
        if not self.terms:
            return "0"
        order = order or TermOrder.grlex(self.n)
        monos = sorted(self.terms, key=order.key, reverse=True)
        if lead is not None:
            monos.remove(tuple(lead))
            monos.insert(0, tuple(lead))
        parts = []
        for i, m in enumerate(monos):
            s = format_term(m, self.terms[m])
            if i == 0 and mark_lead:
                s = "*" + s
            parts.append(s)
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.render()!r}, n={self.n}, p={self.p})"

    def __str__(self):
        return self.render()


def format_monomial(mono: Monomial) -> str:
    factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e]
    return "*".join(factors) if factors else "1"


def format_term(mono: Monomial, c: int) -> str:
    if not any(mono):
        return str(c)
    body = format_monomial(mono)
    return body if c == 1 else f"{c}*{body}"


def parse_polynomial(text: str, n: int, p: int) -> Polynomial:
    """Inverse of :meth:`Polynomial.render` (also accepts ``-`` and ``*`` marks)."""
    text = text.replace("*x", " x").replace("-", "+-").replace("*", " ")
    out: dict = {}
    for raw in text.split("+"):
        tok = raw.split()
        if not tok:
            continue
        c, mono = 1, [0] * n
        for t in tok:
            if t.startswith("x"):
                name, _, e = t.partition("^")
                mono[int(name[1:]) - 1] += int(e) if e else 1
            elif t == "-":
                c = -c
            elif t.startswith("-x"):
                c = -c
                name, _, e = t[1:].partition("^")
                mono[int(name[1:]) - 1] += int(e) if e else 1
            else:
                c *= int(t)
        m = tuple(mono)
        out[m] = out.get(m, 0) + c
    return Polynomial(out, n, p)


def leading_term(f: Polynomial, order: TermOrder) -> tuple:
    return f.leading_term(order)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``G``.

    The first divisor in list order whose leading monomial divides the current
    term is used.
    """
    if any(g.is_zero() for g in G):
        raise ValueError("cannot divide by the zero polynomial")
    p = f.p
    inv = inverse_table(p)
    leads = [g.leading_term(order) for g in G]
    rest = dict(f.terms)
    rem: dict = {}
    key = order.key
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for g, (lm, lc) in zip(G, leads):
            if divides(lm, m):
                q = mono_div(m, lm)
                s = c * inv[lc] % p
                for gm, gc in g.terms.items():
                    t = mono_mul(gm, q)
                    v = (rest.get(t, 0) - s * gc) % p
                    if v:
                        rest[t] = v
                    else:
                        rest.pop(t, None)
                break
        else:
            rem[m] = c
            del rest[m]
    return Polynomial(rem, f.n, p)


@dataclass(frozen=True)
class ReducedGB:
    """Reduced Gröbner basis: monic generators paired with their leading monomials.

    Generators are stored sorted by leading monomial so equal bases compare
    equal; ``order_witness`` is informational and ignored by ``==``.
    """

    generators: tuple
    order_witness: TermOrder | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted(self.generators, key=lambda lg: lg[0])))

    @classmethod
    def from_polys(cls, polys: Iterable[Polynomial], order: TermOrder) -> "ReducedGB":
        return cls(tuple((f.leading_term(order)[0], f) for f in polys), order)

    @property
    def leading_monomials(self) -> tuple:
        return tuple(lm for lm, _ in self.generators)

    @property
    def polys(self) -> list:
        return [f for _, f in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.polys)

    def render(self, mark_lead: bool = True) -> list[str]:
        order = self.order_witness
        return [f.render(order, lead=lm, mark_lead=mark_lead) for lm, f in self.generators]

    def __str__(self):
        return "{" + ", ".join(self.render()) + "}"

    def is_reduced(self) -> bool:
        leads = self.leading_monomials
        if len(set(leads)) != len(leads):
            return False
        for lm, f in self.generators:
            if f.terms.get(lm) != 1:
                return False
            for other in leads:
                for m in f.terms:
                    if divides(other, m) and not (other == lm and m == lm):
                        return False
        return True


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    inv = inverse_table(f.p)
    lcm = mono_lcm(mf, mg)
    return f.shift(mono_div(lcm, mf), inv[cf]) - g.shift(mono_div(lcm, mg), inv[cg])


def interreduce(G: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Minimalize, then fully reduce and make monic."""
    G = [g for g in G if g]
    leads = {id(g): g.leading_term(order)[0] for g in G}
    G.sort(key=lambda g: order.key(leads[id(g)]))
    minimal = []
    for g in G:
        lm = leads[id(g)]
        if any(divides(leads[id(h)], lm) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = g.monic(order)
        lm = leads[id(g)]
        tail = Polynomial({m: c for m, c in r.terms.items() if m != lm}, r.n, r.p)
        tail = normal_form(tail, others, order) if others else tail
        out.append(Polynomial.monomial(lm, r.p) + tail)
    return out


def buchberger(F: Sequence[Polynomial], order: TermOrder) -> ReducedGB:
    """Reduced Gröbner basis of ``<F>`` under ``order``.

    Pairs whose leading monomials are coprime are skipped (product criterion).
    """
    G = [f.monic(order) for f in F if f]
    if not G:
        raise ValueError("generating set is zero")
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop()
        li, lj = G[i].leading_term(order)[0], G[j].leading_term(order)[0]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            G.append(r.monic(order))
            k = len(G) - 1
            pairs.extend((a, k) for a in range(k))
    return ReducedGB.from_polys(interreduce(G, order), order)


def is_factor_closed_poly(f: Polynomial, lead: Monomial) -> bool:
    supp = sorted(f.terms, key=sum)
    if any(not divides(m, lead) for m in supp):
        return False
    return all(divides(a, b) for a, b in zip(supp, supp[1:]))


def is_factor_closed(G: ReducedGB) -> bool:
    """Every generator's support is a divisibility chain topped by its leading monomial."""
    return all(is_factor_closed_poly(f, lm) for lm, f in G.generators)


def field_polynomials(n: int, p: int) -> list[Polynomial]:
    """``x_i^p - x_i`` for every variable."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    return [Polynomial({unit(n, i, p): 1, unit(n, i): -1}, n, p) for i in range(n)]
