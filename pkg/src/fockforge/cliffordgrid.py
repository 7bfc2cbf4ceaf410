"""Vectorised evaluation of colored Clifford words on a full product basis.

The basis of ``F^r`` restricted to per-slot states ``W`` (bounded size and
charge) is the grid ``W x ... x W``.  A single colored fermion acts on one
axis through a lookup table, and its cross-slot sign depends only on the
charges of the preceding axes.  So after any word of operators the target
and the coefficient of every grid point factor over the axes: per-axis
target indices and per-axis signs.  Coefficients on the full grid are then
outer products, which numpy evaluates exactly in int8.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fermions import MayaState, contract, maya_states, wedge

SENTINEL = -1


@dataclass
class SlotUniverse:
    """States reachable from ``W`` by at most ``depth`` fermions with |index| <= ``max_index``."""

    states: list
    index: dict
    base_count: int
    parity: np.ndarray  # (-1)^charge, int8
    tables: dict  # (kind, k) -> (target index array, sign array)

    @classmethod
    def build(cls, base: Sequence[MayaState], max_index: int, depth: int = 2) -> "SlotUniverse":
        states = list(base)
        index = {s: n for n, s in enumerate(states)}
        ops = [(kind, k) for kind in ("psi", "psi*") for k in range(-max_index, max_index + 1)]
        frontier = list(states)
        for _ in range(depth):
            new = []
            for s in frontier:
                for kind, k in ops:
                    res = (wedge if kind == "psi" else contract)(k, s)
                    if res is not None and res[1] not in index:
                        index[res[1]] = len(states)
                        states.append(res[1])
                        new.append(res[1])
            frontier = new
        # tables are only needed on states at most depth-1 steps from W
        domain = len(states) - len(frontier)
        tables = {}
        for kind, k in ops:
            tgt = np.full(len(states), SENTINEL, dtype=np.int64)
            sgn = np.zeros(len(states), dtype=np.int8)
            fn = wedge if kind == "psi" else contract
            for n in range(domain):
                res = fn(k, states[n])
                if res is not None:
                    tgt[n] = index[res[1]]
                    sgn[n] = res[0]
            tables[(kind, k)] = (tgt, sgn)
        parity = np.array([-1 if s.charge % 2 else 1 for s in states], dtype=np.int8)
        return cls(states, index, len(base), parity, tables)


@dataclass
class Term:
    """Per-axis targets and signs of a word applied to every grid point."""

    targets: list  # per axis int64 arrays over the base states
    signs: list  # per axis int8 arrays


def apply_word(universe: SlotUniverse, r: int, word: Sequence[tuple]) -> Term:
    """Apply ``word`` (list of ``(color, kind, k)``, rightmost first) to the grid."""
    base = np.arange(universe.base_count, dtype=np.int64)
    targets = [base.copy() for _ in range(r)]
    signs = [np.ones(universe.base_count, dtype=np.int8) for _ in range(r)]
    for color, kind, k in reversed(word):
        if not 0 <= color < r:
            raise ValueError(f"color {color} out of range for r={r}")
        # cross-slot sign from the current charges of the preceding axes
        for s in range(color):
            alive = targets[s] != SENTINEL
            signs[s] = signs[s] * np.where(alive, universe.parity[np.where(alive, targets[s], 0)], 0).astype(np.int8)
        tgt, sgn = universe.tables[(kind, k)]
        cur = targets[color]
        alive = cur != SENTINEL
        safe = np.where(alive, cur, 0)
        targets[color] = np.where(alive, tgt[safe], SENTINEL)
        signs[color] = (signs[color] * np.where(alive, sgn[safe], 0)).astype(np.int8)
    return Term(targets, signs)


def _outer(vectors: Sequence[np.ndarray], op) -> np.ndarray:
    out = vectors[0]
    for v in vectors[1:]:
        out = op(out[..., None], v)
    return out


def check_anticommutator(universe: SlotUniverse, r: int, a: tuple, b: tuple, expected: int) -> tuple[bool, str]:
    """Check ``{A, B} = expected * id`` on every grid point exactly.

    Returns ``(ok, counterexample description)``.
    """
    t1 = apply_word(universe, r, [a, b])
    t2 = apply_word(universe, r, [b, a])
    base = np.arange(universe.base_count, dtype=np.int64)
    axes = [base] * r
    if expected == 0:
        # off the joint support both coefficients vanish and nothing is expected
        axes = [np.flatnonzero((x != 0) | (y != 0)) for x, y in zip(t1.signs, t2.signs)]
        if any(len(ax) == 0 for ax in axes):
            return True, ""
        t1 = Term([t[ax] for t, ax in zip(t1.targets, axes)], [s[ax] for s, ax in zip(t1.signs, axes)])
        t2 = Term([t[ax] for t, ax in zip(t2.targets, axes)], [s[ax] for s, ax in zip(t2.signs, axes)])
    c1 = _outer(t1.signs, np.multiply)
    c2 = _outer(t2.signs, np.multiply)
    same_axes = [np.array_equal(x, y) for x, y in zip(t1.targets, t2.targets)]
    if all(same_axes):
        total = c1 + c2
        at_source = _outer([t == ax for t, ax in zip(t1.targets, axes)], np.logical_and)
        want = np.where(at_source, np.int8(expected), np.int8(0))
        bad = total != want
    else:
        same = _outer([x == y for x, y in zip(t1.targets, t2.targets)], np.logical_and)
        src1 = _outer([t == ax for t, ax in zip(t1.targets, axes)], np.logical_and)
        src2 = _outer([t == ax for t, ax in zip(t2.targets, axes)], np.logical_and)
        # coefficient landing on the source itself
        diag = np.where(src1, c1, 0) + np.where(src2, c2, 0)
        bad = diag != expected
        # coefficients landing elsewhere must cancel
        off1 = np.where(~src1, c1 + np.where(same, c2, 0), 0)
        off2 = np.where(~src2 & ~same, c2, 0)
        bad |= (off1 != 0) | (off2 != 0)
    if not bad.any():
        return True, ""
    point = np.unravel_index(int(np.argmax(bad)), bad.shape)
    state = tuple(universe.states[int(ax[i])] for ax, i in zip(axes, point))
    return False, f"{{{a}, {b}}} fails on {state}"


def clifford_relations(r: int, max_index: int):
    """All anticommutator relations with their expected scalars."""
    idx = range(-max_index, max_index + 1)
    for i in range(r):
        for j in range(r):
            for k in idx:
                for l in idx:
                    yield (i, "psi", k), (j, "psi", l), 0
                    yield (i, "psi*", k), (j, "psi*", l), 0
                    yield (i, "psi", k), (j, "psi*", l), int(i == j and k == l)


def sweep(r: int, max_slot_size: int, max_charge: int, max_index: int):
    """Run every relation; returns ``(checked relations, grid points, failures)``."""
    base = maya_states(max_slot_size, range(-max_charge, max_charge + 1))
    universe = SlotUniverse.build(base, max_index)
    failures = []
    count = 0
    for a, b, expected in clifford_relations(r, max_index):
        ok, detail = check_anticommutator(universe, r, a, b, expected)
        count += 1
        if not ok:
            failures.append(detail)
    return count, len(base) ** r, failures
