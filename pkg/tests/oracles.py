"""Independent reference implementations used only by the tests.

Each oracle reaches its answer by a different route than the library:
brute-force enumeration, rim-hook peeling, Pieri strips, Jacobi-Trudi
determinants, explicit finite wedges, and the two-parameter Ext character.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial


# -- partitions -----------------------------------------------------------------

def brute_partitions(n: int) -> set[tuple[int, ...]]:
    """All partitions of n by growing multisets part by part."""
    out = set()

    def grow(rest, cap, acc):
        if rest == 0:
            out.add(tuple(acc))
            return
        for part in range(1, min(rest, cap) + 1):
            grow(rest - part, part, acc + [part])

    grow(n, n, [])
    return out


def series_partition_counts(n: int, r: int = 1) -> list[int]:
    """Coefficients of prod_i (1 - x^i)^{-r} up to x^n."""
    coeffs = [1] + [0] * n
    for _ in range(r):
        for i in range(1, n + 1):
            for d in range(i, n + 1):
                coeffs[d] += coeffs[d - i]
    return coeffs


def rim_hook_core(lam, k: int) -> tuple[int, ...]:
    """Remove k-rim hooks one at a time: a bead x with x - k free moves down."""
    length = len(lam)
    beads = {lam[i] - i + length - 1 for i in range(length)} if length else set()
    moved = True
    while moved:
        moved = False
        for x in sorted(beads, reverse=True):
            if x - k >= 0 and x - k not in beads:
                beads.remove(x)
                beads.add(x - k)
                moved = True
                break
    seq = sorted(beads, reverse=True)
    parts = [b - (length - 1 - i) for i, b in enumerate(seq)]
    return tuple(p for p in parts if p > 0)


def content_colors(lam, k: int, offset: int = 0) -> tuple[int, ...]:
    counts = [0] * k
    for i, row in enumerate(lam):
        for j in range(row):
            counts[(j - i + offset) % k] += 1
    return tuple(counts)


def hooks(lam) -> list[int]:
    conj = [sum(1 for row in lam if row > j) for j in range(lam[0] if lam else 0)]
    return [lam[i] - j - 1 + conj[j] - i - 1 + 1 for i in range(len(lam)) for j in range(lam[i])]


def dimension_by_hooks(lam) -> int:
    prod = 1
    for h in hooks(lam):
        prod *= h
    return factorial(sum(lam)) // prod


# -- symmetric functions -------------------------------------------------------------

def _strips(lam, n: int, vertical: bool):
    lam = list(lam)
    if vertical:
        # vertical strip of lam = horizontal strip of the conjugate
        conj = [sum(1 for row in lam if row > j) for j in range(lam[0] if lam else 0)]
        for mu in _strips(conj, n, False):
            yield tuple(sum(1 for row in mu if row > j) for j in range(mu[0] if mu else 0))
        return
    rows = lam + [0]

    def rec(i, left, acc):
        if i == len(rows):
            if left == 0:
                yield tuple(p for p in acc if p > 0)
            return
        upper = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(upper + 1):
            yield from rec(i + 1, left - add, acc + [rows[i] + add])

    yield from rec(0, n, [])


def pieri_h(lam, n: int) -> set[tuple[int, ...]]:
    return set(_strips(lam, n, vertical=False))


def pieri_e(lam, n: int) -> set[tuple[int, ...]]:
    return set(_strips(lam, n, vertical=True))


def _z(mu) -> int:
    out = 1
    for part, mult in Counter(mu).items():
        out *= part**mult * factorial(mult)
    return out


def _h_power(n: int) -> dict:
    if n < 0:
        return {}
    if n == 0:
        return {(): Fraction(1)}
    return {mu: Fraction(1, _z(mu)) for mu in brute_partitions(n)}


def _p_mult(a: dict, b: dict) -> dict:
    out: dict = {}
    for x, c in a.items():
        for y, d in b.items():
            key = tuple(sorted(x + y, reverse=True))
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _perm_sign(perm) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def jacobi_trudi_power(lam) -> dict:
    """``s_lam = det(h_{lam_i - i + j})`` expanded in power sums."""
    l = len(lam)
    if l == 0:
        return {(): Fraction(1)}
    total: dict = {}
    for perm in permutations(range(l)):
        term = {(): Fraction(_perm_sign(perm))}
        for i in range(l):
            term = _p_mult(term, _h_power(lam[i] - i + perm[i]))
            if not term:
                break
        for key, c in term.items():
            total[key] = total.get(key, 0) + c
    return {k: v for k, v in total.items() if v}


# -- finite wedges --------------------------------------------------------------------

DEPTH = 40  # even floor, so a slot holds charge + DEPTH entries and its parity is the charge's


def finite_wedge(charge: int, shape) -> list[int]:
    """Entries ``lam_j + charge - j`` down to ``-DEPTH + 1``, decreasing."""
    count = charge + DEPTH
    parts = list(shape) + [0] * (count - len(shape))
    return [parts[j] + charge - j for j in range(count)]


def wedge_insert(entries: list[int], k: int):
    if k in entries or k <= entries[-1]:
        return None
    above = sum(1 for e in entries if e > k)
    return (-1) ** above, sorted(entries + [k], reverse=True)


def wedge_remove(entries: list[int], k: int):
    if k not in entries or k <= entries[-1] + 1:
        return None
    above = sum(1 for e in entries if e > k)
    return (-1) ** above, [e for e in entries if e != k]


def colored_apply(states, color: int, k: int, insert: bool):
    """Act on the concatenated finite wedge of all slots; returns (sign, states) or None.

    ``states`` is a tuple of ``(charge, shape)`` pairs.
    """
    lists = [finite_wedge(m, lam) for m, lam in states]
    before = sum(len(l) for l in lists[:color])
    res = (wedge_insert if insert else wedge_remove)(lists[color], k)
    if res is None:
        return None
    sign, new = res
    lists[color] = new
    out = []
    for lst in lists:
        charge = len(lst) - DEPTH
        out.append((charge, tuple(p for p in (e - charge + j for j, e in enumerate(lst)) if p > 0)))
    return sign * (-1) ** before, tuple(out)


# -- two-parameter tangent character --------------------------------------------------

def ext_character(lams, charges) -> Counter:
    """Character of the tangent space at a fixed point from the Ext formula.

    ``sum_{a,b} e_b/e_a (V_b + V_a^* t1 t2 - (1 - t1)(1 - t2) V_a^* V_b)``
    with ``V = sum t1^{-i} t2^{-j}``, specialised to ``t1 = t``, ``t2 = 1/t``
    and twisted by ``t^{l_b - l_a}``.
    """
    r = len(lams)

    def cells(lam):
        return [(i, j) for i, row in enumerate(lam) for j in range(row)]

    acc: Counter = Counter()

    def add(a1, a2, b, a, mult):
        e = [0] * r
        e[b] += 1
        e[a] -= 1
        acc[(a1 - a2 + charges[b] - charges[a],) + tuple(e)] += mult

    for a in range(r):
        for b in range(r):
            va = [(-i, -j) for i, j in cells(lams[a])]
            vb = [(-i, -j) for i, j in cells(lams[b])]
            for x in vb:
                add(x[0], x[1], b, a, 1)
            for x in va:
                add(1 - x[0], 1 - x[1], b, a, 1)
            for x in va:
                for y in vb:
                    for d1, d2, s in ((0, 0, -1), (1, 0, 1), (0, 1, 1), (1, 1, -1)):
                        add(y[0] - x[0] + d1, y[1] - x[1] + d2, b, a, s)
    return Counter({key: m for key, m in acc.items() if m})
