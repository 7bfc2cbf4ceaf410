"""Partitions, cells, hooks, colorings and the abacus (k-cores, k-quotients).

Cells use matrix coordinates ``(i, j)``: row ``i``, column ``j``, and
``(i, j)`` lies in ``lam`` iff ``j < lam[i]``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

Cell = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Being a tuple subclass, partitions hash, compare and sort like tuples.
    """

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """``lam_i`` with the convention ``lam_i = 0`` past the last row."""
        return self[i] if 0 <= i < len(self) else 0

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self):
            for j in range(row):
                yield (i, j)

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        if isinstance(cell, tuple) and len(cell) == 2:
            i, j = cell
            return i >= 0 and 0 <= j < self.part(i)
        return super().__contains__(cell)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


EMPTY = Partition()

Multipartition = tuple  # tuple[Partition, ...]


def multipartition(*components: Sequence[int]) -> tuple[Partition, ...]:
    return tuple(Partition(c) for c in components)


def multi_size(lams: Sequence[Partition]) -> int:
    return sum(sum(lam) for lam in lams)


def parse_partition(text: str) -> Partition:
    """Parse the CLI syntax ``[a,b,c]`` (``[]`` is the empty partition)."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"malformed partition {text!r}: expected [a,b,...]")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: non-integer entry") from None
    return Partition(parts)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition([sum(1 for p in lam if p > j) for j in range(lam[0])])


def arm(lam: Partition, cell: Cell) -> int:
    i, j = cell
    return lam.part(i) - j - 1


def leg(lam: Partition, cell: Cell) -> int:
    i, j = cell
    return conjugate(lam).part(j) - i - 1


def hook(lam: Partition, cell: Cell) -> int:
    return arm(lam, cell) + leg(lam, cell) + 1


def relative_hook(lam_a: Partition, lam_b: Partition, cell: Cell) -> int:
    """Arm measured in ``lam_a`` plus leg measured in ``lam_b`` plus one.

    The cell must belong to ``lam_a``; the result can be zero or negative.
    """
    if cell not in lam_a:
        raise ValueError(f"cell {cell} is not in {lam_a!r}")
    return arm(lam_a, cell) + leg(lam_b, cell) + 1


def hook_lengths(lam: Partition) -> list[int]:
    return [hook(lam, c) for c in lam.cells()]


def cell_color(cell: Cell, k: int, offset: int = 0) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    i, j = cell
    return (j - i + offset) % k


def color_counts(lam: Partition, k: int, offset: int = 0) -> tuple[int, ...]:
    counts = [0] * k
    for c in lam.cells():
        counts[cell_color(c, k, offset)] += 1
    return tuple(counts)


def is_k_regular(lam: Partition, k: int) -> bool:
    """True iff every color ``0..k-1`` occurs equally often (offset 0)."""
    return len(set(color_counts(lam, k))) == 1


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    yield from _partitions_bounded(n, n)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence (independent of enumeration)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, g = 0, 1
    while True:
        p1 = g * (3 * g - 1) // 2
        p2 = g * (3 * g + 1) // 2
        if p1 > n:
            break
        sign = 1 if g % 2 else -1
        total += sign * (partition_count(n - p1) + partition_count(n - p2))
        g += 1
    return total


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``r`` parts."""
    if r == 0:
        if n == 0:
            yield ()
        return
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def multipartitions_of(n: int, r: int) -> Iterator[tuple[Partition, ...]]:
    if r < 1:
        raise ValueError("arity must be at least 1")
    for sizes in compositions(n, r):
        yield from _product([list(partitions_of(s)) for s in sizes])


def _product(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _product(pools[1:]):
            yield (head,) + tail


@lru_cache(maxsize=None)
def multipartition_count(n: int, r: int) -> int:
    """Number of r-tuples of partitions of total size n (convolution of p)."""
    if r == 0:
        return 1 if n == 0 else 0
    return sum(partition_count(a) * multipartition_count(n - a, r - 1) for a in range(n + 1))


# -- abacus ------------------------------------------------------------------

def beta_numbers(lam: Partition, length: int, charge: int = 0) -> list[int]:
    """The first ``length`` entries ``lam_j + charge - j`` of the Maya sequence."""
    if length < len(lam):
        raise ValueError("length must cover every part")
    return [lam.part(j) + charge - j for j in range(length)]


def _partition_from_beads(beads: Sequence[int], charge: int) -> Partition:
    beads = sorted(beads, reverse=True)
    return Partition([b - charge + j for j, b in enumerate(beads)])


def _abacus_length(lam: Partition, k: int) -> int:
    length = len(lam) + 1
    return length + (-length) % k


def runners(lam: Partition, k: int) -> list[tuple[int, Partition]]:
    """Split the charge-0 Maya sequence of ``lam`` over ``k`` runners.

    Bead ``b`` sits on runner ``b mod k`` at level ``b // k``.  Returns, for
    each runner, the charge and partition of the Maya sequence it carries.
    """
    if k < 1:
        raise ValueError("k must be positive")
    length = _abacus_length(lam, k)
    beads = beta_numbers(lam, length)
    out = []
    for m in range(k):
        levels = sorted((b // k for b in beads if b % k == m), reverse=True)
        # every level below ``bottom`` is occupied (beads <= -length)
        bottom = -length // k + (1 if m == 0 else 0)
        charge = bottom - 1 + len(levels)
        out.append((charge, _partition_from_beads(levels, charge)))
    return out


def _assemble(runner_data: Sequence[tuple[int, Partition]], k: int) -> Partition:
    # all beads <= floor are present on every runner
    floor = min(k * (charge - len(part)) + m for m, (charge, part) in enumerate(runner_data))
    beads = []
    for m, (charge, part) in enumerate(runner_data):
        j = 0
        while True:
            b = k * (part.part(j) + charge - j) + m
            if b <= floor:
                break
            beads.append(b)
            j += 1
    total_charge = floor + len(beads)
    if total_charge != 0:
        raise ValueError(f"runner charges give total charge {total_charge}, expected 0")
    return _partition_from_beads(beads, 0)


def k_core(lam: Partition, k: int) -> Partition:
    return _assemble([(charge, EMPTY) for charge, _ in runners(lam, k)], k)


def k_quotient(lam: Partition, k: int) -> tuple[Partition, ...]:
    return tuple(part for _, part in runners(lam, k))


def from_core_quotient(core: Partition, quotient: Sequence[Partition], k: int) -> Partition:
    if len(quotient) != k:
        raise ValueError(f"quotient must have {k} components")
    data = runners(Partition(core), k)
    if any(part for _, part in data):
        raise ValueError(f"{core!r} is not a {k}-core")
    return _assemble([(charge, Partition(q)) for (charge, _), q in zip(data, quotient)], k)


def k_sign(lam: Partition, k: int) -> int:
    """Sign of the permutation sorting the beads of ``lam`` into runner order.

    Both ``lam`` and its k-core are read on the same window, and the result is
    normalised so that cores have sign +1.
    """
    length = _abacus_length(lam, k)
    return _bead_sign(lam, k, length) * _bead_sign(k_core(lam, k), k, length)


def _bead_sign(lam: Partition, k: int, length: int) -> int:
    beads = beta_numbers(lam, length)
    grouped = sorted(beads, key=lambda b: (b % k, -b))
    position = {b: i for i, b in enumerate(grouped)}
    return _permutation_sign([position[b] for b in beads])


def _permutation_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def colors_of_multipartition(lams: Sequence[Partition], charges: Sequence[int], k: int) -> tuple[int, ...]:
    counts = Counter()
    for lam, l in zip(lams, charges):
        for c in lam.cells():
            counts[cell_color(c, k, l)] += 1
    return tuple(counts[c] for c in range(k))
