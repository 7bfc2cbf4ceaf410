"""The affine algebra gl(r)^ acting on r-colored wedge space.

Generators are ``E_ij (x) t^a``, the central ``c`` and the derivation ``d``.
On the wedge side

    E_ij (x) t^a  ->  sum_n :psi_i(n) psi_j*(n+a):

which is a finite sum on each basis state, and for ``i = j`` is the
bosonic mode ``p_i(a)``.  Normal ordering only matters for ``i = j, a = 0``
where the operator is the slot charge.  Positive loop degrees lower the
energy ``sum_i |lam_i| + l_i (l_i + 1) / 2``; ``c`` acts by the level and
``d`` by minus the energy, so ``[d, x (x) t^a] = a x (x) t^a`` and the
vacua are highest weight vectors.

The dilated action ``x (x) t^a -> x (x) t^{ka}`` realises gl(r)^_k with
``c -> k`` and ``d -> d / k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .fermions import MayaState, colored_contract, colored_wedge
from .partitions import multipartitions_of
from .vectors import FockVector, as_fraction

Key = tuple  # ("E", i, j, a) | ("c",) | ("d",)


class LieElement:
    """Finite rational combination of ``E_ij t^a``, ``c`` and ``d``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            acc[key] = acc.get(key, 0) + as_fraction(coeff)
        self.terms = {k: v for k, v in acc.items() if v}

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other * -1

    def __mul__(self, s) -> "LieElement":
        s = as_fraction(s)
        return LieElement({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return "LieElement(" + " + ".join(f"{c}*{_key_str(k)}" for k, c in sorted(self.terms.items())) + ")"


def _key_str(key: Key) -> str:
    if key[0] == "E":
        return f"E{key[1]}{key[2]}t^{key[3]}"
    return key[0]


def E(i: int, j: int, a: int = 0) -> LieElement:
    return LieElement({("E", i, j, a): 1})


def H(i: int, a: int = 0) -> LieElement:
    return E(i, i, a)


def central() -> LieElement:
    return LieElement({("c",): 1})


def derivation() -> LieElement:
    return LieElement({("d",): 1})


def _bracket_keys(x: Key, y: Key) -> dict:
    if x[0] == "c" or y[0] == "c":
        return {}
    if x[0] == "d" and y[0] == "d":
        return {}
    if x[0] == "d":
        return {y: Fraction(y[3])}
    if y[0] == "d":
        return {x: Fraction(-x[3])}
    _, i, j, a = x
    _, k, l, b = y
    out: Counter = Counter()
    if j == k:
        out[("E", i, l, a + b)] += 1
    if l == i:
        out[("E", k, j, a + b)] -= 1
    if a + b == 0 and j == k and i == l:
        out[("c",)] += a
    return dict(out)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """``[x t^a, y t^b] = [x, y] t^{a+b} + a delta_{a+b,0} tr(xy) c``, ``[d, x t^a] = a x t^a``."""
    acc: list = []
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            for key, c in _bracket_keys(kx, ky).items():
                acc.append((key, cx * cy * c))
    return LieElement(acc)


# -- wedge-side action ----------------------------------------------------------

def energy(state: tuple) -> int:
    return sum(f.size + f.charge * (f.charge + 1) // 2 for f in state)


@dataclass(frozen=True)
class WeightVector:
    h: tuple[int, ...]
    level: int
    energy: Fraction


def weight_of(state: tuple, k: int = 1) -> WeightVector:
    return WeightVector(tuple(f.charge for f in state), k, Fraction(-energy(state), k))


@lru_cache(maxsize=1 << 20)
def _generator_on_state(i: int, j: int, a: int, state: tuple) -> tuple:
    """``sum_n :psi_i(n - a) psi_j*(n):`` on one basis state, as (label, coeff) pairs."""
    if i == j and a == 0:
        return ((state, state[i].charge),) if state[i].charge else ()
    src = state[j]
    # psi_i(n - a) vanishes unless n - a lies above the tail of slot i
    lower = state[i].tail_top + a + 1
    candidates = [e for e in src.head if e >= lower] + list(range(src.tail_top, lower - 1, -1))
    out: dict = {}
    for n in candidates:
        first = colored_contract(j, n, state)
        if first is None:
            continue
        second = colored_wedge(i, n - a, first[1])
        if second is None:
            continue
        label = second[1]
        out[label] = out.get(label, 0) + first[0] * second[0]
    return tuple((lab, c) for lab, c in out.items() if c)


@dataclass(frozen=True)
class FermionicGlr:
    """gl(r)^ acting on r-colored wedges; ``k > 1`` gives the dilated subalgebra."""

    r: int
    k: int = 1

    def key_operator(self, key: Key) -> Callable[[tuple], FockVector]:
        if key[0] == "c":
            return lambda s: FockVector.basis(s, self.k)
        if key[0] == "d":
            return lambda s: FockVector.basis(s, Fraction(-energy(s), self.k))
        _, i, j, a = key
        if not (0 <= i < self.r and 0 <= j < self.r):
            raise ValueError(f"generator {key} out of range for r={self.r}")
        a *= self.k
        return lambda s: FockVector(_generator_on_state(i, j, a, s))

    def operator(self, x: LieElement) -> Callable[[tuple], FockVector]:
        ops = [(self.key_operator(key), c) for key, c in x.terms.items()]

        def op(s) -> FockVector:
            acc = FockVector()
            for f, c in ops:
                acc = acc + f(s) * c
            return acc

        return op

    def act(self, x: LieElement, v: FockVector) -> FockVector:
        return v.map_basis(self.operator(x))


def zero_action(x: LieElement, v: FockVector) -> FockVector:
    return FockVector()


def level_of(
    act: Callable[[LieElement, FockVector], FockVector],
    probes: Iterable[FockVector],
    n: int = 1,
    color: int = 0,
) -> Fraction:
    """Scalar of ``[h_i t^n, h_i t^{-n}] / n`` on the probe vectors.

    Raises when the bracket is not the same multiple of the identity on
    every probe.
    """
    x, y = H(color, n), H(color, -n)
    seen: set = set()
    for v in probes:
        if not v:
            continue
        comm = act(x, act(y, v)) - act(y, act(x, v))
        label, c = next(iter(v.items()))
        scalar = comm.coefficient(label) / c
        if comm != v * scalar:
            raise ValueError(f"bracket is not scalar on probe {v!r}")
        seen.add(scalar / n)
    if len(seen) > 1:
        raise ValueError(f"central element acts by several scalars: {sorted(seen)}")
    return seen.pop() if seen else Fraction(0)


# -- characters -------------------------------------------------------------

def charge_splits(r: int, m: int, max_energy: int) -> list[tuple[int, ...]]:
    """Charge vectors summing to ``m`` whose vacuum energy is at most ``max_energy``."""
    # c (c + 1) / 2 <= max_energy bounds every entry
    slot = [c for c in range(-2 * max_energy - 2, 2 * max_energy + 2) if c * (c + 1) // 2 <= max_energy]
    out = []

    def rec(prefix, used):
        if len(prefix) == r - 1:
            last = m - sum(prefix)
            if used + last * (last + 1) // 2 <= max_energy:
                out.append(prefix + (last,))
            return
        for c in slot:
            cost = used + c * (c + 1) // 2
            if cost <= max_energy:
                rec(prefix + (c,), cost)

    rec((), 0)
    return sorted(out)


def states_up_to_energy(r: int, m: int, max_energy: int):
    for charges in charge_splits(r, m, max_energy):
        base = sum(c * (c + 1) // 2 for c in charges)
        for n in range(max_energy - base + 1):
            for lams in multipartitions_of(n, r):
                yield tuple(MayaState(c, lam) for c, lam in zip(charges, lams))


def graded_character(r: int, m: int, max_energy: int) -> dict:
    """``{energy: {h-weight: count}}`` for the total-charge-``m`` block."""
    table: dict = {}
    for state in states_up_to_energy(r, m, max_energy):
        e = energy(state)
        h = tuple(f.charge for f in state)
        table.setdefault(e, Counter())[h] += 1
    return {e: dict(sorted(c.items())) for e, c in sorted(table.items())}


def dimension_by_energy(r: int, m: int, max_energy: int) -> dict[int, int]:
    return {e: sum(c.values()) for e, c in graded_character(r, m, max_energy).items()}


__all__ = [
    "LieElement",
    "E",
    "H",
    "central",
    "derivation",
    "bracket",
    "FermionicGlr",
    "zero_action",
    "level_of",
    "energy",
    "weight_of",
    "WeightVector",
    "graded_character",
    "dimension_by_energy",
    "charge_splits",
]
