"""Minimal polynomial dynamical systems fitting input-output data."""
from __future__ import annotations

from dataclasses import dataclass

from .enumeration import enumerate_reduced_gbs
from .ideal import DataError, DataSet, _data_lines, ideal_membership, interpolate
from .polynomial import ReducedGB, normal_form


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class InputOutputData:
    p: int
    n: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple((tuple(int(v) for v in s), tuple(int(v) for v in t)) for s, t in self.pairs)
        for s, t in pairs:
            if len(s) != self.n or len(t) != self.n:
                raise DataError(f"pair {s} -> {t} does not have {self.n} coordinates")
            if any(not 0 <= v < self.p for v in s + t):
                raise DataError(f"pair {s} -> {t} has values outside 0..{self.p - 1}")
        inputs = [s for s, _ in pairs]
        if len(set(inputs)) != len(inputs):
            raise DataError("input points must be distinct")
        object.__setattr__(self, "pairs", pairs)

    @property
    def inputs(self) -> DataSet:
        return DataSet(self.p, self.n, [s for s, _ in self.pairs])

    @classmethod
    def parse(cls, text: str) -> "InputOutputData":
        rows = _data_lines(text)
        if not rows:
            raise DataError("empty input: expected a 'p n' header line")
        (lineno, head), body = rows[0], rows[1:]
        if len(head) != 2:
            raise DataError(f"line {lineno}: header must be 'p n'")
        p, n = head
        pairs = []
        seen = set()
        for ln, vals in body:
            if len(vals) != 2 * n:
                raise DataError(f"line {ln}: expected {2 * n} integers, got {len(vals)}")
            if any(not 0 <= v < p for v in vals):
                raise DataError(f"line {ln}: value out of range 0..{p - 1}")
            s = tuple(vals[:n])
            if s in seen:
                raise DataError(f"line {ln}: repeated input {s}")
            seen.add(s)
            pairs.append((s, tuple(vals[n:])))
        return cls(p, n, pairs)


@dataclass(frozen=True)
class PDS:
    """One polynomial per coordinate, mapping Z_p^n to itself."""

    components: tuple

    def __call__(self, point) -> tuple:
        return tuple(f(point) for f in self.components)

    def fits(self, data: InputOutputData) -> bool:
        return all(self(s) == t for s, t in data.pairs)

    @property
    def support(self) -> set:
        return {m for f in self.components for m in f.terms}

    def render(self) -> list[str]:
        return [f"f{i + 1} = {f.render()}" for i, f in enumerate(self.components)]


def interpolating_pds(data: InputOutputData) -> PDS:
    return PDS(tuple(
        interpolate([(s, t[j]) for s, t in data.pairs], data.p, data.n) for j in range(data.n)))


def minimal_pds(data: InputOutputData, G: ReducedGB) -> PDS:
    """Reduce each interpolating component modulo G."""
    S = data.inputs
    if G.order_witness is None:
        raise ModelError("basis carries no term order to divide with")
    if not all(ideal_membership(g, S) for g in G.polys):
        raise ModelError("basis does not belong to the ideal of the input points")
    f = interpolating_pds(data)
    return PDS(tuple(normal_form(c, G.polys, G.order_witness) for c in f.components))


def enumerate_minimal_models(data: InputOutputData) -> list:
    """Distinct minimal PDSs over all reduced GBs of the input ideal, in basis order."""
    out = []
    for basis in enumerate_reduced_gbs(data.inputs).bases:
        model = minimal_pds(data, basis)
        if model not in out:
            out.append(model)
    return out

