from __future__ import annotations

import json
from fractions import Fraction

import pytest

from fockforge.partitions import EMPTY, Partition, partition_count, partitions_of
from fockforge.symfun import (
    BASES,
    BosonicState,
    SymElement,
    bosonic_inner,
    character,
    colored_p,
    convert,
    epsilon,
    format_rational,
    graded_dimension,
    hall_inner,
    heisenberg_p,
    multiply,
    op_e,
    op_h,
    shift_q,
    z,
)

from oracles import jacobi_trudi_power, pieri_e, pieri_h

N = 6


def S(*lam, N=N, basis="schur"):
    return SymElement.basis_element(basis, Partition(lam), N)


def test_power_to_schur_example():
    assert convert(S(2, basis="power"), "schur") == S(2) - S(1, 1)
    assert S(2, basis="power").to("schur").terms == {Partition([2]): 1, Partition([1, 1]): -1}


def test_schur_product_example():
    assert multiply(S(1), S(1)) == S(2) + S(1, 1)


def test_hall_inner_examples():
    assert hall_inner(S(2, basis="p"), S(2, basis="p")) == 2
    assert hall_inner(S(1, 1, basis="p"), S(1, 1, basis="p")) == 2
    assert hall_inner(S(2), S(1, 1)) == 0


def test_op_h_example():
    one = SymElement.one(N)
    got = op_h(2, one)
    want = (S(1, 1, basis="p") + S(2, basis="p")) * Fraction(1, 2)
    assert got == want


def test_z_and_epsilon():
    assert z(Partition([2, 1, 1])) == 2 * 1 * 2
    assert z(EMPTY) == 1
    assert epsilon(Partition([3])) == 1
    assert epsilon(Partition([2, 1])) == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_power_expansion_matches_jacobi_trudi(n):
    for lam in partitions_of(n):
        got = convert(S(*lam), "power").terms
        want = {Partition(k): v for k, v in jacobi_trudi_power(tuple(lam)).items()}
        assert got == want


@pytest.mark.parametrize("n", range(1, 7))
def test_character_orthogonality(n):
    parts = list(partitions_of(n))
    for lam in parts:
        for mu in parts:
            total = sum(Fraction(character(lam, nu) * character(mu, nu), z(nu)) for nu in parts)
            assert total == (1 if lam == mu else 0)


@pytest.mark.parametrize("src", BASES)
def test_round_trip_through_every_basis(src):
    for n in range(N + 1):
        for lam in partitions_of(n):
            x = SymElement.basis_element(src, lam, N)
            for dst in BASES:
                y = convert(convert(x, dst), src)
                assert y.terms == x.terms


def test_basis_aliases_and_bad_basis():
    assert SymElement("s", 2, {Partition([1]): 1}).basis == "schur"
    with pytest.raises(ValueError):
        SymElement("q", 2)


def test_monomial_elementary_small_case():
    # e_2 = m_{11}
    assert convert(S(2, basis="e"), "monomial").terms == {Partition([1, 1]): 1}
    # h_2 = m_2 + m_11
    assert convert(S(2, basis="h"), "monomial").terms == {Partition([2]): 1, Partition([1, 1]): 1}


@pytest.mark.parametrize("k", range(1, 4))
def test_pieri_rules(k):
    for n in range(N - k + 1):
        for lam in partitions_of(n):
            x = S(*lam)
            h = convert(op_h(k, x), "schur").terms
            e = convert(op_e(k, x), "schur").terms
            assert h == {Partition(mu): 1 for mu in pieri_h(tuple(lam), k)}
            assert e == {Partition(mu): 1 for mu in pieri_e(tuple(lam), k)}


def test_skew_operators_are_adjoint():
    basis = [S(*lam) for n in range(N + 1) for lam in partitions_of(n)]
    for k in (1, 2, 3):
        for x in basis:
            for y in basis:
                if sum(next(iter(x.terms))) + k > N:
                    continue
                assert hall_inner(op_h(k, x), y) == hall_inner(x, op_h(-k, y))
                assert hall_inner(op_e(k, x), y) == hall_inner(x, op_e(-k, y))


def test_heisenberg_relation_and_adjointness():
    basis = [S(*lam, basis="p") for n in range(N + 1) for lam in partitions_of(n)]
    for n in range(1, 4):
        for m in range(1, 4):
            for x in basis:
                if sum(next(iter(x.terms))) + m > N:
                    continue
                lhs = heisenberg_p(n, heisenberg_p(-m, x)) - heisenberg_p(-m, heisenberg_p(n, x))
                assert lhs == x * (n if n == m else 0)
    p1 = S(1, basis="p")
    assert heisenberg_p(1, p1) == SymElement.one(N)
    with pytest.raises(ValueError):
        heisenberg_p(0, p1)


@pytest.mark.parametrize("c", range(1, 5))
def test_signed_h_e_identity(c):
    # sum_a (-1)^a e_a h_{c-a} = 0 for c >= 1
    one = SymElement.one(N)
    total = SymElement("power", N)
    for a in range(c + 1):
        total = total + op_e(a, op_h(c - a, one)) * (-1) ** a
    assert total == 0


def test_truncation_flags_overflow():
    x = S(3, N=3)
    y = multiply(x, S(1, N=3))
    assert y.overflow and not y.terms
    assert op_h(1, x).overflow
    with pytest.raises(ValueError):
        SymElement("schur", 1, {Partition([2]): 1})
    with pytest.raises(ValueError):
        S(1, N=2) + S(1, N=3)


def test_graded_dimension():
    assert [graded_dimension(n) for n in range(11)] == [partition_count(n) for n in range(11)]


def test_json_round_trip_and_format():
    x = S(2, basis="p") * Fraction(-3, 4) + S(1, basis="p")
    text = x.to_json()
    data = json.loads(text)
    assert data["basis"] == "power" and data["N"] == N
    assert {tuple(t["partition"]): t["coeff"] for t in data["terms"]} == {(2,): "-3/4", (1,): "1"}
    assert SymElement.from_json(text) == x
    assert format_rational(Fraction(6, 3)) == "2"


def test_bosonic_shift_q_adjoint_and_colored_p():
    a = BosonicState.basis((0, 1), ((1,), ()), 3)
    b = BosonicState.basis((1, 1), ((1,), ()), 3)
    assert shift_q(0, 1, a) == b
    assert bosonic_inner(shift_q(0, 1, a), b) == bosonic_inner(a, shift_q(0, -1, b)) == 1
    # p(1) kills the single box; p(-1) adds one in both places
    vac = BosonicState.basis((0, 1), ((), ()), 3)
    assert colored_p(0, 1, a) == vac
    grown = colored_p(1, -1, a)
    assert grown == BosonicState.basis((0, 1), ((1,), (1,)), 3)
    with pytest.raises(ValueError):
        shift_q(2, 1, a)
