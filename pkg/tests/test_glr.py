from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from fockforge.fermions import MayaState, colored_states, vacuum
from fockforge.glr import (
    E,
    FermionicGlr,
    H,
    LieElement,
    bracket,
    central,
    charge_splits,
    derivation,
    dimension_by_energy,
    energy,
    graded_character,
    level_of,
    weight_of,
    zero_action,
)
from fockforge.partitions import Partition
from fockforge.vectors import FockVector

from oracles import series_partition_counts

STATES = list(colored_states(2, range(-1, 2), max_total_size=3))


def generators(r, amax):
    for i, j in product(range(r), repeat=2):
        for a in range(-amax, amax + 1):
            yield E(i, j, a)


def test_bracket_structure_constants():
    assert bracket(E(0, 1, 1), E(1, 0, -1)) == H(0, 0) - H(1, 0) + central()
    assert bracket(H(0, 2), H(0, -2)) == central() * 2
    assert bracket(derivation(), E(0, 1, 3)) == E(0, 1, 3) * 3
    assert bracket(central(), E(0, 0, 1)) == LieElement()


def test_bracket_antisymmetry_and_jacobi():
    gens = list(generators(2, 1)) + [derivation()]
    for x in gens:
        for y in gens:
            assert bracket(x, y) == bracket(y, x) * -1
    for x in gens[:8]:
        for y in gens[:8]:
            for z in gens[:8]:
                total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
                assert total == LieElement()


@pytest.mark.parametrize("k", [1, 2])
def test_action_is_a_representation(k):
    rep = FermionicGlr(2, k)
    gens = list(generators(2, 1)) + [derivation(), central()]
    for x in gens:
        for y in gens:
            rhs = rep.operator(bracket(x, y))
            for s in STATES[:40]:
                v = FockVector.basis(s)
                lhs = rep.act(x, rep.act(y, v)) - rep.act(y, rep.act(x, v))
                assert lhs == v.map_basis(rhs)


def test_level_and_dilated_level():
    probes = [FockVector.basis(s) for s in STATES]
    assert level_of(FermionicGlr(2).act, probes) == 1
    assert level_of(FermionicGlr(2, 3).act, probes) == 3
    assert level_of(zero_action, probes) == 0


def test_cartan_reads_charges_and_total_charge_is_preserved():
    rep = FermionicGlr(2)
    for s in STATES:
        v = FockVector.basis(s)
        for i in range(2):
            assert rep.act(H(i), v) == v * s[i].charge
        for x in generators(2, 2):
            for label in rep.act(x, v).labels():
                assert sum(f.charge for f in label) == sum(f.charge for f in s)


def test_positive_modes_kill_vacua_and_lower_energy():
    rep = FermionicGlr(2)
    vac = FockVector.basis((vacuum(0), vacuum(0)))
    for i, j in product(range(2), repeat=2):
        for a in (1, 2):
            assert rep.act(E(i, j, a), vac) == FockVector()
    for s in STATES:
        for x in generators(2, 2):
            ((_, i, j, a),) = x.terms
            for label in rep.act(x, FockVector.basis(s)).labels():
                assert energy(label) == energy(s) - a


def test_weight_and_energy():
    s = (MayaState(1, Partition([2])), MayaState(-1, Partition()))
    assert energy(s) == 2 + 1 + 0
    w = weight_of(s, 2)
    assert w.h == (1, -1) and w.level == 2 and w.energy == Fraction(-3, 2)


def test_out_of_range_generator():
    with pytest.raises(ValueError):
        FermionicGlr(2).operator(E(0, 2))((vacuum(0), vacuum(0)))


def test_charge_splits():
    assert charge_splits(2, 0, 1) == [(-1, 1), (0, 0), (1, -1)]
    assert all(sum(c) == 1 for c in charge_splits(3, 1, 4))


def test_graded_dimensions_match_theta_over_eta():
    top = 8
    assert list(dimension_by_energy(1, 0, top).values()) == series_partition_counts(top)
    # r = 2: sum over charge vectors (c, -c) with energy c^2
    base = series_partition_counts(top, 2)
    want = [sum(base[e - c * c] for c in range(-3, 4) if c * c <= e) for e in range(top + 1)]
    assert list(dimension_by_energy(2, 0, top).values()) == want
    assert want[:5] == [1, 4, 9, 20, 42]
    ch = graded_character(2, 0, 1)
    assert ch[0] == {(0, 0): 1}
    assert ch[1] == {(-1, 1): 1, (0, 0): 2, (1, -1): 1}
