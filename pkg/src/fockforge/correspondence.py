"""The boson-fermion correspondence and the operators it intertwines.

``phi`` sends the colored wedge with charges ``l`` and shapes ``lam`` to
``q^l s_lam``.  Fermion bilinears realise the power-sum operators on the
wedge side; the vertex operators realise ``psi`` on the bosonic side:

    psi(k)  on charge m  =  q      * sum_{i>=0} (-1)^i h_{k-m-1+i} e_i^perp
    psi*(k) on charge m  =  q^{-1} * sum_{i>=0} (-1)^i e_i h_{k-m+i}^perp

with ``h_j = 0`` for ``j < 0``.  Both pick up the same cross-slot sign as
the colored fermions.
"""

from __future__ import annotations

from typing import Callable

from .fermions import (
    MayaState,
    colored_contract,
    colored_wedge,
    contract,
    koszul_sign,
    wedge,
)
from .symfun import BosonicState, colored_slot_op, shift_q
from .vectors import FockVector

Operator = Callable[[object], FockVector]


def _as_colored(label) -> tuple:
    return (label,) if isinstance(label, MayaState) else tuple(label)


def phi(x: FockVector, N: int | None = None) -> BosonicState:
    """Wedge vector -> bosonic state.  Bare Maya states are treated as r = 1."""
    out = FockVector()
    top = 0
    for label, c in x.items():
        state = _as_colored(label)
        charges = tuple(f.charge for f in state)
        shapes = tuple(f.shape for f in state)
        top = max([top] + [f.size for f in state])
        out._add_term((charges, shapes), c)
    return BosonicState(out, top if N is None else N)


def phi_inverse(y: BosonicState) -> FockVector:
    """Bosonic state -> colored wedge vector (labels are tuples of MayaState)."""
    out = FockVector()
    for (charges, shapes), c in y.vector.items():
        out._add_term(tuple(MayaState(m, lam) for m, lam in zip(charges, shapes)), c)
    return out


def _compose(*steps):
    """Apply basis-level steps right to left; each returns (sign, label) or None."""

    def run(label):
        sign = 1
        for step in reversed(steps):
            res = step(label)
            if res is None:
                return None
            s, label = res
            sign *= s
        return sign, label

    return run


# -- bosons from fermions -------------------------------------------------------

def _occupied_from(f: MayaState, lower: int) -> list[int]:
    """Occupied positions ``>= lower`` of a single Maya state."""
    top = f.tail_top
    return [e for e in f.head if e >= lower] + list(range(top, lower - 1, -1))


def _bilinear_sum(i: int, shift: int) -> Operator:
    """``sum_j psi_i(j + shift) psi_i*(j)``, a finite sum on each basis state."""

    def op(label) -> FockVector:
        state = _as_colored(label)
        out = FockVector()
        # psi(j+shift) kills j+shift <= tail_top
        for j in _occupied_from(state[i], state[i].tail_top - shift + 1):
            res = _compose(
                lambda s: colored_wedge(i, j + shift, s),
                lambda s: colored_contract(i, j, s),
            )(state)
            if res is not None:
                out._add_term(_relabel(label, res[1]), res[0])
        return out

    return op


def boson_from_fermion(i: int, n: int) -> Operator:
    """``p_i(n) = sum_k psi_i(k) psi_i*(k+n)``; for ``n = 0`` the normal-ordered charge."""
    if n == 0:
        return charge_operator(i)
    return _bilinear_sum(i, -n)


def boson_from_fermion_shifted(i: int, n: int) -> Operator:
    """The other index placement ``sum_j psi_i(j+n) psi_i*(j)``; equals ``p_i(-n)``."""
    if n == 0:
        return charge_operator(i)
    return _bilinear_sum(i, n)


def charge_operator(i: int) -> Operator:
    """``sum_{j>0} psi psi*(j) - sum_{j<=0} psi* psi(j)`` in slot ``i``."""

    def op(label) -> FockVector:
        state = _as_colored(label)
        f = state[i]
        total = 0
        top = max(f.head[0] if f.head else f.tail_top, f.tail_top, 0)
        for j in range(1, top + 1):
            res = _compose(lambda s: colored_wedge(i, j, s), lambda s: colored_contract(i, j, s))(state)
            if res is not None:
                total += res[0]
        for j in range(f.tail_top + 1, 1):
            res = _compose(lambda s: colored_contract(i, j, s), lambda s: colored_wedge(i, j, s))(state)
            if res is not None:
                total -= res[0]
        return FockVector.basis(label, total)

    return op


def _relabel(template, state: tuple):
    return state[0] if isinstance(template, MayaState) else state


# -- fermions from bosons -------------------------------------------------------

def _slot_charges(x: BosonicState, i: int, m: int | None) -> None:
    if m is None:
        return
    for (charges, _), _c in x.vector.items():
        if charges[i] != m:
            raise ValueError(f"operand has slot-{i} charge {charges[i]}, expected {m}")


def _single(x: BosonicState, label, c) -> BosonicState:
    return BosonicState(FockVector.basis(label, c), x.N, x.overflow)


def vertex_psi(i: int, k: int, x: BosonicState, m: int | None = None) -> BosonicState:
    """Bosonic realisation of ``psi_i(k)``; ``m`` optionally pins the slot charge."""
    _slot_charges(x, i, m)
    acc = BosonicState(FockVector(), x.N)
    for label, c in x.vector.items():
        charges, shapes = label
        a = k - charges[i] - 1
        sign = -1 if sum(charges[:i]) % 2 else 1
        piece = BosonicState(FockVector(), x.N)
        for j in range(0, sum(shapes[i]) + 1):
            if a + j < 0:
                continue
            term = _single(x, label, c * sign * (-1) ** j)
            term = colored_slot_op(i, ("e", -j), term)
            term = colored_slot_op(i, ("h", a + j), term)
            piece = piece + term
        acc = acc + shift_q(i, +1, piece)
    return acc


def vertex_psi_star(i: int, k: int, x: BosonicState, m: int | None = None) -> BosonicState:
    """Bosonic realisation of ``psi_i*(k)``."""
    _slot_charges(x, i, m)
    acc = BosonicState(FockVector(), x.N)
    for label, c in x.vector.items():
        charges, shapes = label
        a = k - charges[i]
        sign = -1 if sum(charges[:i]) % 2 else 1
        size = sum(shapes[i])
        piece = BosonicState(FockVector(), x.N)
        for j in range(max(0, -a), size - a + 1):
            term = _single(x, label, c * sign * (-1) ** j)
            term = colored_slot_op(i, ("h", -(a + j)), term)
            term = colored_slot_op(i, ("e", j), term)
            piece = piece + term
        acc = acc + shift_q(i, -1, piece)
    return acc


def psi_degree_shift(k: int, m: int) -> tuple[int, int]:
    """(charge change, degree change) of ``psi(k)`` on charge ``m``: (1, k - m - 1)."""
    return 1, k - m - 1


# -- sl(infinity) Chevalley generators -----------------------------------------

def _bilinear(a: int, b: int) -> Operator:
    """``psi(a) psi*(b)`` on single Maya states."""

    def op(s: MayaState) -> FockVector:
        res = _compose(lambda t: wedge(a, t), lambda t: contract(b, t))(s)
        return FockVector() if res is None else FockVector.basis(res[1], res[0])

    return op


def sl_infty_chevalley(k: int) -> dict[str, Operator]:
    """``e_k = psi(k+1) psi*(k)``, ``f_k = psi(k) psi*(k+1)``, ``h_k = [e_k, f_k]``."""
    e = _bilinear(k + 1, k)
    f = _bilinear(k, k + 1)

    def h(s: MayaState) -> FockVector:
        return FockVector.basis(s).map_basis(f).map_basis(e) - FockVector.basis(s).map_basis(e).map_basis(f)

    return {"e": e, "f": f, "h": h}


def commutator(a: Operator, b: Operator) -> Operator:
    def op(label) -> FockVector:
        v = FockVector.basis(label)
        return v.map_basis(b).map_basis(a) - v.map_basis(a).map_basis(b)

    return op


def anticommutator(a: Operator, b: Operator) -> Operator:
    def op(label) -> FockVector:
        v = FockVector.basis(label)
        return v.map_basis(b).map_basis(a) + v.map_basis(a).map_basis(b)

    return op


__all__ = [
    "phi",
    "phi_inverse",
    "boson_from_fermion",
    "boson_from_fermion_shifted",
    "charge_operator",
    "vertex_psi",
    "vertex_psi_star",
    "psi_degree_shift",
    "sl_infty_chevalley",
    "commutator",
    "anticommutator",
    "koszul_sign",
]
