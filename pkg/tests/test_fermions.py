from __future__ import annotations

from fractions import Fraction

import pytest

from fockforge.fermions import (
    DimensionVector,
    MayaState,
    colored_contract,
    colored_psi,
    colored_states,
    colored_wedge,
    contract,
    dimension_vector_of,
    fermionic_inner,
    format_maya,
    koszul_sign,
    maya_from_partition,
    maya_of_dimension_vector,
    maya_states,
    parse_maya,
    partition_from_maya,
    psi,
    psi_star,
    vacuum,
    wedge,
)
from fockforge.partitions import Partition
from fockforge.vectors import FockVector

from oracles import colored_apply, finite_wedge, wedge_insert, wedge_remove

STATES = maya_states(5, range(-2, 3))


def test_vacuum_examples():
    assert psi(1, vacuum(0)) == FockVector.basis(vacuum(1))
    assert psi(0, vacuum(0)) == FockVector()
    assert psi_star(0, vacuum(0)) == FockVector.basis(vacuum(-1))
    assert psi_star(1, vacuum(0)) == FockVector()


def test_signs_count_entries_above():
    s = maya_from_partition([2], 0)  # entries 2, -1, -2, ...
    assert s.head == (2,)
    assert wedge(0, s) == (-1, MayaState(1, Partition([1])))
    assert contract(2, s) == (1, vacuum(-1))
    assert contract(-1, s) == (-1, MayaState(-1, Partition([3])))


@pytest.mark.parametrize("k", range(-5, 6))
def test_wedge_and_contract_match_finite_wedges(k):
    for s in STATES:
        entries = finite_wedge(s.charge, s.shape)
        for fn, oracle in ((wedge, wedge_insert), (contract, wedge_remove)):
            got = fn(k, s)
            want = oracle(entries, k)
            if want is None:
                assert got is None
                continue
            sign, new = want
            assert got is not None
            assert got[0] == sign
            cut = len(new) - 2
            assert finite_wedge(got[1].charge, got[1].shape)[:cut] == new[:cut]


@pytest.mark.parametrize("k", range(-4, 5))
def test_single_color_clifford_relations(k):
    for s in maya_states(4, range(-1, 2)):
        for l in range(-4, 5):
            v = FockVector.basis(s)

            def anti(a, b):
                return v.map_basis(lambda x: b(x)).map_basis(lambda x: a(x)) + v.map_basis(lambda x: a(x)).map_basis(
                    lambda x: b(x)
                )

            def P(n):
                return lambda x: psi(n, x)

            def S(n):
                return lambda x: psi_star(n, x)

            assert anti(P(k), P(l)) == FockVector()
            assert anti(S(k), S(l)) == FockVector()
            assert anti(P(k), S(l)) == (v if k == l else FockVector())


def test_adjointness():
    basis = maya_states(4, range(-1, 2))
    for k in range(-4, 5):
        for a in basis:
            for b in basis:
                lhs = fermionic_inner(psi(k, a), FockVector.basis(b))
                rhs = fermionic_inner(FockVector.basis(a), psi_star(k, b))
                assert lhs == rhs


def test_koszul_sign_and_colored_matches_oracle():
    states = list(colored_states(2, range(-1, 2), max_slot_size=3))
    for st in states:
        assert koszul_sign(st, 0) == 1
        assert koszul_sign(st, 1) == (-1) ** (st[0].charge % 2)
        pairs = tuple((f.charge, tuple(f.shape)) for f in st)
        for color in range(2):
            for k in range(-3, 4):
                for fn, insert in ((colored_wedge, True), (colored_contract, False)):
                    got = fn(color, k, st)
                    want = colored_apply(pairs, color, k, insert)
                    if want is None:
                        assert got is None
                    else:
                        sign, new = want
                        assert got[0] == sign
                        assert tuple((f.charge, tuple(f.shape)) for f in got[1]) == new


def test_colored_cross_slot_anticommute():
    st = (vacuum(1), vacuum(0))
    ab = colored_psi(0, 2, st).map_basis(lambda x: colored_psi(1, 1, x))
    ba = colored_psi(1, 1, st).map_basis(lambda x: colored_psi(0, 2, x))
    assert ab == -ba and ab


def test_bad_color_rejected():
    with pytest.raises(ValueError):
        colored_wedge(2, 0, (vacuum(0), vacuum(0)))


def test_partition_round_trip():
    for s in STATES:
        lam, m = partition_from_maya(s)
        assert maya_from_partition(lam, m) == s


def test_dimension_vector_round_trip_and_counting_rule():
    for s in STATES:
        d = dimension_vector_of(s)
        assert maya_of_dimension_vector(d) == s
        assert d.total == s.size
        # above the charge an occupied k drops v by one; at or below it a hole raises v
        for k in range(-8, 9):
            jump = d[k] - d[k - 1]
            if k > s.charge:
                assert jump == (-1 if s.occupied(k) else 0)
            else:
                assert jump == (0 if s.occupied(k) else 1)


def test_dimension_vector_of_vacuum_is_zero():
    assert dimension_vector_of(vacuum(3)) == DimensionVector(3, ())


def test_inconsistent_dimension_vector_rejected():
    with pytest.raises(ValueError):
        maya_of_dimension_vector(DimensionVector.from_dict(0, {5: 1}))
    with pytest.raises(ValueError):
        maya_of_dimension_vector(DimensionVector.from_dict(0, {0: -1}))


def test_text_format():
    s = maya_from_partition([3, 1], 1)
    assert format_maya(s) == "charge=1; wedge=[4,1]"
    assert parse_maya("charge=1; wedge=[4,1]") == s
    assert parse_maya("charge=0; wedge=[]") == vacuum(0)
    for s in STATES:
        assert parse_maya(format_maya(s)) == s
    for bad in ("charge=0; wedge=[1,2]", "wedge=[1]", "charge=0; wedge=[-5]"):
        with pytest.raises(ValueError):
            parse_maya(bad)


def test_inner_is_exact_fraction():
    v = FockVector({vacuum(0): Fraction(1, 2), vacuum(1): 3})
    assert fermionic_inner(v, v) == Fraction(37, 4)
