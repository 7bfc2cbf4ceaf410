"""Finite formal linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


class FockVector:
    """Sparse vector: basis label -> nonzero Fraction.

    Labels can be any hashable basis object (Maya states, colored Maya
    states, bosonic labels).  Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        self._terms: dict = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, coeff in items:
            self._add_term(label, as_fraction(coeff))

    @classmethod
    def basis(cls, label: Hashable, coeff=1) -> "FockVector":
        return cls([(label, coeff)])

    def _add_term(self, label, coeff: Fraction) -> None:
        if not coeff:
            return
        new = self._terms.get(label, 0) + coeff
        if new:
            self._terms[label] = new
        else:
            self._terms.pop(label, None)

    def items(self):
        return self._terms.items()

    def labels(self):
        return self._terms.keys()

    def coefficient(self, label) -> Fraction:
        return self._terms.get(label, Fraction(0))

    def __getitem__(self, label) -> Fraction:
        return self.coefficient(label)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FockVector):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        out = FockVector()
        out._terms = dict(self._terms)
        for label, c in other.items():
            out._add_term(label, c)
        return out

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __neg__(self) -> "FockVector":
        out = FockVector()
        out._terms = {k: -v for k, v in self._terms.items()}
        return out

    def __mul__(self, scalar) -> "FockVector":
        s = as_fraction(scalar)
        out = FockVector()
        if s:
            out._terms = {k: v * s for k, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "FockVector(0)"
        body = " + ".join(f"{c}*{label!r}" for label, c in self._terms.items())
        return f"FockVector({body})"

    def map_basis(self, op: Callable[[Hashable], "FockVector"]) -> "FockVector":
        """Extend ``op`` (basis label -> vector) linearly."""
        acc: dict = {}
        for label, c in self._terms.items():
            for target, d in op(label).items():
                v = acc.get(target, 0) + c * d
                if v:
                    acc[target] = v
                else:
                    acc.pop(target, None)
        out = FockVector()
        out._terms = acc
        return out


def inner(x: FockVector, y: FockVector) -> Fraction:
    """Bilinear pairing declaring the labels orthonormal."""
    if len(x) > len(y):
        x, y = y, x
    return sum((c * y.coefficient(label) for label, c in x.items()), Fraction(0))


def zero() -> FockVector:
    return FockVector()
