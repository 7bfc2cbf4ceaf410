"""Semi-infinite wedge space and the Clifford action.

A Maya state ``i_0 > i_1 > ...`` of charge ``m`` agrees with the vacuum
``m > m-1 > ...`` from some point on.  It is stored as ``(charge, shape)``
where ``shape`` is the partition with ``shape_j = i_j - m + j``; this is the
same data as the finite exception set, and equality/hashing cost only the
length of the shape.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .partitions import EMPTY, Partition, partitions_of
from .vectors import FockVector, inner

ColoredMayaState = tuple  # tuple[MayaState, ...]


@dataclass(frozen=True, order=True)
class MayaState:
    charge: int
    shape: Partition = EMPTY

    def __post_init__(self):
        if not isinstance(self.shape, Partition):
            object.__setattr__(self, "shape", Partition(self.shape))

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def tail_top(self) -> int:
        """Largest ``F`` such that every integer ``<= F`` is occupied."""
        return self.charge - len(self.shape)

    @property
    def head(self) -> tuple[int, ...]:
        """Entries above the vacuum tail, in decreasing order."""
        m = self.charge
        return tuple(p + m - j for j, p in enumerate(self.shape))

    def entries(self, count: int) -> list[int]:
        m = self.charge
        return [self.shape.part(j) + m - j for j in range(count)]

    def occupied(self, k: int) -> bool:
        if k <= self.tail_top:
            return True
        return k in self.head

    def count_above(self, k: int) -> int:
        """Number of entries strictly greater than ``k``."""
        above = sum(1 for e in self.head if e > k)
        return above + max(0, self.tail_top - k)

    def __str__(self) -> str:
        return format_maya(self)


def vacuum(m: int) -> MayaState:
    return MayaState(m, EMPTY)


def maya_from_partition(lam: Sequence[int], m: int) -> MayaState:
    return MayaState(m, Partition(lam))


def partition_from_maya(s: MayaState) -> tuple[Partition, int]:
    return s.shape, s.charge


def _from_entries(entries: Sequence[int], floor: int) -> MayaState:
    """Build the state whose entries above ``floor`` are ``entries`` and which
    contains every integer ``<= floor``."""
    ordered = sorted(entries, reverse=True)
    charge = floor + len(ordered)
    return MayaState(charge, Partition([e - charge + j for j, e in enumerate(ordered)]))


@lru_cache(maxsize=1 << 20)
def wedge(k: int, s: MayaState) -> tuple[int, MayaState] | None:
    """``psi(k)`` on one basis state as ``(sign, state)``; None when zero."""
    if s.occupied(k):
        return None
    sign = -1 if s.count_above(k) % 2 else 1
    return sign, _from_entries(s.head + (k,), s.tail_top)


@lru_cache(maxsize=1 << 20)
def contract(k: int, s: MayaState) -> tuple[int, MayaState] | None:
    """``psi*(k)`` on one basis state as ``(sign, state)``; None when zero."""
    if not s.occupied(k):
        return None
    sign = -1 if s.count_above(k) % 2 else 1
    floor = s.tail_top
    if k > floor:
        return sign, _from_entries([e for e in s.head if e != k], floor)
    entries = list(s.head) + list(range(floor, k, -1))
    return sign, _from_entries(entries, k - 1)


def _as_vector(result) -> FockVector:
    if result is None:
        return FockVector()
    sign, state = result
    return FockVector.basis(state, sign)


def psi(k: int, s: MayaState) -> FockVector:
    return _as_vector(wedge(k, s))


def psi_star(k: int, s: MayaState) -> FockVector:
    return _as_vector(contract(k, s))


def koszul_sign(state: ColoredMayaState, color: int) -> int:
    """``(-1)`` to the total charge of the factors preceding ``color``."""
    return -1 if sum(f.charge for f in state[:color]) % 2 else 1


def _check_color(color: int, state: ColoredMayaState) -> None:
    if not 0 <= color < len(state):
        raise ValueError(f"color {color} out of range for r={len(state)}")


def colored_wedge(color: int, k: int, state: ColoredMayaState):
    _check_color(color, state)
    res = wedge(k, state[color])
    if res is None:
        return None
    sign, new = res
    return sign * koszul_sign(state, color), state[:color] + (new,) + state[color + 1:]


def colored_contract(color: int, k: int, state: ColoredMayaState):
    _check_color(color, state)
    res = contract(k, state[color])
    if res is None:
        return None
    sign, new = res
    return sign * koszul_sign(state, color), state[:color] + (new,) + state[color + 1:]


def colored_psi(color: int, k: int, state: ColoredMayaState) -> FockVector:
    return _as_vector(colored_wedge(color, k, state))


def colored_psi_star(color: int, k: int, state: ColoredMayaState) -> FockVector:
    return _as_vector(colored_contract(color, k, state))


def fermionic_inner(x: FockVector, y: FockVector):
    return inner(x, y)


# -- dimension vectors --------------------------------------------------------

@dataclass(frozen=True)
class DimensionVector:
    """Finitely supported ``v: Z -> N`` together with a charge ``l``."""

    charge: int
    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, charge: int, v: dict[int, int]) -> "DimensionVector":
        return cls(charge, tuple(sorted((k, n) for k, n in v.items() if n)))

    def __getitem__(self, k: int) -> int:
        return dict(self.entries).get(k, 0)

    @property
    def total(self) -> int:
        return sum(n for _, n in self.entries)


def dimension_vector_of(s: MayaState) -> DimensionVector:
    """``v_k`` read off from how many entries exceed ``k``.

    ``v_k`` is the count above ``k`` when ``k > l``, and that count minus
    ``l - k`` when ``k <= l``.
    """
    l = s.charge
    top = max(s.head[0] if s.head else l, l) + 1
    bottom = min(s.tail_top, l) - 1
    v = {}
    for k in range(bottom, top + 1):
        n = s.count_above(k) - (l - k if k <= l else 0)
        if n:
            v[k] = n
    return DimensionVector.from_dict(l, v)


def maya_of_dimension_vector(d: DimensionVector) -> MayaState:
    """Inverse of :func:`dimension_vector_of`; rejects inconsistent input."""
    l = d.charge
    v = dict(d.entries)
    if any(n < 0 for n in v.values()):
        raise ValueError(f"negative entry in dimension vector {v}")
    support = list(v) + [l]
    floor = min(support) - 1
    chosen = []
    for k in range(floor + 1, max(support) + 2):
        same = v.get(k, 0) == v.get(k - 1, 0)
        if (k > l and not same) or (k <= l and same):
            chosen.append(k)
    state = _from_entries(chosen, floor)
    if state.charge != l:
        raise ValueError(
            f"dimension vector {v} at charge {l} produces a wedge of charge {state.charge}"
        )
    back = dimension_vector_of(state)
    if back != DimensionVector.from_dict(l, v):
        raise ValueError(
            f"dimension vector {v} at charge {l} violates the counting rule; "
            f"nearest wedge {format_maya(state)} has {dict(back.entries)}"
        )
    return state


# -- enumeration and text format ---------------------------------------------

def maya_states(max_size: int, charges: Iterable[int]) -> list[MayaState]:
    return [MayaState(m, lam) for m in charges for n in range(max_size + 1) for lam in partitions_of(n)]


def colored_states(
    r: int,
    charges: Iterable[int],
    max_slot_size: int | None = None,
    max_total_size: int | None = None,
) -> Iterator[ColoredMayaState]:
    """Colored basis states with charges drawn from ``charges`` in every slot."""
    charges = list(charges)
    slot_cap = max_slot_size if max_slot_size is not None else max_total_size
    if slot_cap is None:
        raise ValueError("give max_slot_size or max_total_size")
    single = maya_states(slot_cap, charges)
    for combo in product(single, repeat=r):
        if max_total_size is not None and sum(f.size for f in combo) > max_total_size:
            continue
        yield combo


def format_maya(s: MayaState) -> str:
    return f"charge={s.charge}; wedge=[{','.join(map(str, s.head))}]"


_MAYA_RE = re.compile(r"^\s*charge\s*=\s*(-?\d+)\s*;\s*wedge\s*=\s*\[([^\]]*)\]\s*$")


def parse_maya(text: str) -> MayaState:
    match = _MAYA_RE.match(text)
    if not match:
        raise ValueError(f"malformed state {text!r}: expected 'charge=<m>; wedge=[i0,i1,...]'")
    m = int(match.group(1))
    body = match.group(2).strip()
    entries = [int(tok) for tok in body.split(",")] if body else []
    if any(a <= b for a, b in zip(entries, entries[1:])):
        raise ValueError(f"wedge entries must be strictly decreasing: {entries}")
    d = len(entries)
    if entries and entries[-1] <= m - d:
        raise ValueError(f"wedge {entries} does not continue into the charge-{m} vacuum tail")
    return MayaState(m, Partition([e - m + j for j, e in enumerate(entries)]))
