"""Fixed-point combinatorics of framed torsion-free sheaves on P^2.

Torus characters are Laurent polynomials in ``t, e_0, ..., e_{r-1}`` with
integer multiplicities, stored as ``{(a, b_0, ..., b_{r-1}): mult}``.  At
the fixed point ``lam`` with charges ``l`` the tangent character is the
sum over ordered slot pairs of

    N_{a,b} = t^{l_b - l_a} e_b e_a^{-1} (sum_{s in lam_a} t^{-h_{b,a}(s)}
                                          + sum_{s in lam_b} t^{h_{a,b}(s)})

where ``h_{b,a}(s) = arm_{lam_a}(s) + leg_{lam_b}(s) + 1``.  Euler classes
stay factored as multisets of integer linear forms, so ratios of Euler
classes reduce to multiset cancellation.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .partitions import (
    Partition,
    colors_of_multipartition,
    hook,
    is_k_regular,
    k_core,
    k_quotient,
    k_sign,
    multipartitions_of,
    relative_hook,
)
from .symfun import SymElement, character, convert
from .vectors import FockVector

Exponent = tuple  # (a, b_0, ..., b_{r-1})


class TorusCharacter:
    """Integer combination of torus weights ``t^a e^b``."""

    __slots__ = ("terms", "r")

    def __init__(self, r: int, terms: Mapping | Iterable = ()):
        self.r = r
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, mult in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != r + 1:
                raise ValueError(f"exponent {exp} does not have arity {r + 1}")
            acc[exp] += int(mult)
        self.terms = {e: m for e, m in acc.items() if m}

    @classmethod
    def monomial(cls, r: int, a: int, b: Sequence[int] | None = None, mult: int = 1) -> "TorusCharacter":
        b = tuple(b) if b is not None else (0,) * r
        return cls(r, {(a,) + b: mult})

    def _check(self, other: "TorusCharacter") -> None:
        if self.r != other.r:
            raise ValueError(f"rank mismatch {self.r} vs {other.r}")

    def __add__(self, other: "TorusCharacter") -> "TorusCharacter":
        self._check(other)
        return TorusCharacter(self.r, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "TorusCharacter") -> "TorusCharacter":
        self._check(other)
        return TorusCharacter(self.r, list(self.terms.items()) + [(e, -m) for e, m in other.terms.items()])

    def __mul__(self, other: "TorusCharacter") -> "TorusCharacter":
        self._check(other)
        acc: Counter = Counter()
        for e1, m1 in self.terms.items():
            for e2, m2 in other.terms.items():
                acc[tuple(x + y for x, y in zip(e1, e2))] += m1 * m2
        return TorusCharacter(self.r, acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusCharacter) and self.r == other.r and self.terms == other.terms

    __hash__ = None

    def dual(self) -> "TorusCharacter":
        return TorusCharacter(self.r, {tuple(-x for x in e): m for e, m in self.terms.items()})

    def filter(self, keep) -> "TorusCharacter":
        return TorusCharacter(self.r, {e: m for e, m in self.terms.items() if keep(e)})

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        return format_character(self)

    def __repr__(self) -> str:
        return f"TorusCharacter({format_character(self)})"

    def to_json(self) -> str:
        terms = [{"t": e[0], "e": list(e[1:]), "mult": m} for e, m in self.sorted_terms()]
        return json.dumps({"terms": terms}, separators=(",", ":"))


def _power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def format_character(chi: TorusCharacter) -> str:
    """``t + t^-1`` style text; descending exponents, ``e^0`` omitted."""
    if not chi.terms:
        return "0"
    pieces = []
    for exp, mult in chi.sorted_terms():
        factors = []
        if exp[0]:
            factors.append(_power("t", exp[0]))
        factors += [_power(f"e{i}", b) for i, b in enumerate(exp[1:]) if b]
        mono = "*".join(factors) or "1"
        if mult == 1:
            body = mono
        elif mult == -1:
            body = "-" + mono
        else:
            body = f"{mult}*{mono}" if factors else str(mult)
        pieces.append(body)
    text = " + ".join(pieces)
    return text.replace("+ -", "- ")


# -- fixed points and tangent characters ----------------------------------------------

def fixed_points(r: int, n: int, charges: Sequence[int] | None = None):
    """Torus fixed points of ``M_l(r, n)``: all r-multipartitions of ``n``."""
    if charges is not None and len(charges) != r:
        raise ValueError("charge vector must have arity r")
    yield from multipartitions_of(n, r)


def _slot_vector(r: int, plus: int, minus: int) -> tuple:
    b = [0] * r
    b[plus] += 1
    b[minus] -= 1
    return tuple(b)


def pair_character(lams: Sequence[Partition], charges: Sequence[int], alpha: int, beta: int) -> TorusCharacter:
    r = len(lams)
    la, lb = lams[alpha], lams[beta]
    shift = charges[beta] - charges[alpha]
    b = _slot_vector(r, beta, alpha)
    acc: Counter = Counter()
    for s in la.cells():
        acc[(shift - relative_hook(la, lb, s),) + b] += 1
    for s in lb.cells():
        acc[(shift + relative_hook(lb, la, s),) + b] += 1
    return TorusCharacter(r, acc)


def tangent_character(lams: Sequence[Partition], charges: Sequence[int] | None = None) -> TorusCharacter:
    lams = tuple(Partition(l) for l in lams)
    r = len(lams)
    charges = tuple(charges) if charges is not None else (0,) * r
    if len(charges) != r:
        raise ValueError(f"arity mismatch: {r} partitions, {len(charges)} charges")
    total = TorusCharacter(r)
    for a in range(r):
        for b in range(r):
            total = total + pair_character(lams, charges, a, b)
    return total


def hook_character(lams: Sequence[Partition]) -> TorusCharacter:
    """``U = sum_a sum_{s in lam_a} (t^{-h(s)} + t^{h(s)})``."""
    r = len(lams)
    acc: Counter = Counter()
    zero = (0,) * r
    for lam in lams:
        for s in Partition(lam).cells():
            h = hook(Partition(lam), s)
            acc[(h,) + zero] += 1
            acc[(-h,) + zero] += 1
    return TorusCharacter(r, acc)


def diagonal_part(chi: TorusCharacter) -> TorusCharacter:
    return chi.filter(lambda e: not any(e[1:]))


def offdiagonal_part(chi: TorusCharacter) -> TorusCharacter:
    return chi.filter(lambda e: any(e[1:]))


def pairing(exp: Exponent, direction: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(exp, direction))


def split_by_subgroup(chi: TorusCharacter, direction: Sequence[int]):
    """``(N+, N0, N-)`` by the sign of ``rho a + sum sigma_i b_i``."""
    if len(direction) != chi.r + 1:
        raise ValueError(f"direction needs {chi.r + 1} entries")
    plus = chi.filter(lambda e: pairing(e, direction) > 0)
    zero = chi.filter(lambda e: pairing(e, direction) == 0)
    minus = chi.filter(lambda e: pairing(e, direction) < 0)
    return plus, zero, minus


def example1_direction(r: int) -> tuple:
    return (0,) + tuple(range(r))


def example3_direction(r: int) -> tuple:
    return (r,) + tuple(range(r))


# -- Euler classes ------------------------------------------------------------

@dataclass(frozen=True)
class EulerClass:
    """``sign * prod form^count``; forms are canonical (leading coefficient > 0).

    Negative counts encode division, so quotients stay exact.
    """

    sign: int = 1
    factors: tuple = ()  # sorted ((form, count), ...)

    @staticmethod
    def _make(sign: int, counts: Counter) -> "EulerClass":
        return EulerClass(sign, tuple(sorted((f, c) for f, c in counts.items() if c)))

    def __mul__(self, other: "EulerClass") -> "EulerClass":
        counts = Counter(dict(self.factors))
        counts.update(dict(other.factors))
        return EulerClass._make(self.sign * other.sign, counts)

    def __truediv__(self, other: "EulerClass") -> "EulerClass":
        counts = Counter(dict(self.factors))
        counts.subtract(dict(other.factors))
        return EulerClass._make(self.sign * other.sign, counts)

    def __pow__(self, n: int) -> "EulerClass":
        counts = Counter({f: c * n for f, c in self.factors})
        return EulerClass._make(self.sign**n if n >= 0 else self.sign ** (-n), counts)

    @property
    def degree(self) -> int:
        return sum(c for _, c in self.factors)

    def is_constant(self) -> bool:
        return not self.factors

    def constant(self) -> int:
        if self.factors:
            raise ValueError(f"Euler class ratio is not constant: {self}")
        return self.sign

    def __str__(self) -> str:
        if not self.factors:
            return str(self.sign)
        body = "*".join(
            f"({_form_str(f)})" + (f"^{c}" if c != 1 else "") for f, c in self.factors
        )
        return ("-" if self.sign < 0 else "") + body


def _form_str(form: tuple) -> str:
    names = ["x"] + [f"y{i}" for i in range(len(form) - 1)]
    parts = [f"{c}*{n}" if c not in (1, -1) else ("" if c == 1 else "-") + n for c, n in zip(form, names) if c]
    return " + ".join(parts).replace("+ -", "- ")


def _canonical(form: tuple) -> tuple[int, tuple]:
    lead = next(c for c in form if c)
    return (1, form) if lead > 0 else (-1, tuple(-c for c in form))


def euler_class(chi: TorusCharacter) -> EulerClass:
    """Product of the weight forms of ``chi``; zero weights are rejected."""
    counts: Counter = Counter()
    sign = 1
    for exp, mult in chi.terms.items():
        if not any(exp):
            raise ValueError(f"zero weight with multiplicity {mult} in {chi!r}")
        s, form = _canonical(exp)
        counts[form] += mult
        if s < 0 and mult % 2:
            sign = -sign
    return EulerClass._make(sign, counts)


# -- sign relations and localisation -------------------------------------------

@dataclass
class SignReport:
    example: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def zk_invariant(chi: TorusCharacter, k: int) -> TorusCharacter:
    return chi.filter(lambda e: e[0] % k == 0)


def example_normal(example: int, lams, charges, k: int | None = None):
    """Normal character, one-parameter subgroup and expected sign.

    1: off-diagonal part; 2: its Z_k-invariant part; 3: the whole tangent space.
    """
    lams = tuple(Partition(l) for l in lams)
    r = len(lams)
    n = sum(sum(l) for l in lams)
    T = tangent_character(lams, charges)
    if example == 1:
        return offdiagonal_part(T), example1_direction(r), (-1) ** ((r - 1) * n)
    if example == 2:
        if not k:
            raise ValueError("example 2 needs k")
        N = zk_invariant(offdiagonal_part(T), k)
        return N, example1_direction(r), (-1) ** (N.dimension // 2)
    if example == 3:
        return T, example3_direction(r), (-1) ** (r * n)
    raise ValueError(f"unknown example {example}")


def check_sign_relation(example: int, r: int, n: int, charges: Sequence[int] | None = None, k: int | None = None) -> SignReport:
    """Verify ``e(N+) = sign * e(N-)`` at every fixed point of ``M_l(r, n)``."""
    charges = tuple(charges) if charges is not None else (0,) * r
    report = SignReport(example)
    for lams in fixed_points(r, n, charges):
        N, direction, expected = example_normal(example, lams, charges, k)
        plus, zero, minus = split_by_subgroup(N, direction)
        report.checked += 1
        if zero.terms:
            report.failures.append((lams, f"zero weights {zero}"))
            continue
        ratio = euler_class(plus) / euler_class(minus)
        if not ratio.is_constant() or ratio.sign != expected:
            report.failures.append((lams, f"e(N+)/e(N-) = {ratio}, expected {expected}"))
    return report


def localized_inner(lams, mus, charges=None, direction: Sequence[int] | None = None) -> Fraction:
    """``<eta(1_lam), eta(1_mu)>`` evaluated at the fixed points.

    Equals ``(-1)^m e(T) / e(T-)^2`` at ``lam`` when ``lam == mu`` and 0
    otherwise; raises if the result is not a constant.
    """
    lams = tuple(Partition(l) for l in lams)
    mus = tuple(Partition(l) for l in mus)
    if lams != mus:
        return Fraction(0)
    r = len(lams)
    T = tangent_character(lams, charges)
    direction = tuple(direction) if direction is not None else example3_direction(r)
    _, zero, minus = split_by_subgroup(T, direction)
    if zero.terms:
        raise ValueError(f"weights collide with the subgroup: {zero}")
    m = T.dimension // 2
    value = euler_class(T) / euler_class(minus) ** 2
    return Fraction((-1) ** m * value.constant())


# -- Z_k fixed loci and the resolution side -----------------------------------------

def zk_fixed_tangent(lam: Partition, k: int) -> TorusCharacter:
    """Hooks divisible by ``k`` contribute ``t^h + t^{-h}``."""
    lam = Partition(lam)
    if not is_k_regular(lam, k):
        raise ValueError(f"{lam} is not {k}-regular")
    acc: Counter = Counter()
    for s in lam.cells():
        h = hook(lam, s)
        if h % k == 0:
            acc[(h,)] += 1
            acc[(-h,)] += 1
    return TorusCharacter(0, acc)


def resolution_tangent(lams: Sequence[Partition], k: int | None = None) -> TorusCharacter:
    """Tangent character on the Hilbert scheme of the ``A_{k-1}`` resolution (k = arity)."""
    k = len(lams) if k is None else k
    acc: Counter = Counter()
    for lam in lams:
        lam = Partition(lam)
        for s in lam.cells():
            h = hook(lam, s)
            acc[(k * h,)] += 1
            acc[(-k * h,)] += 1
    return TorusCharacter(0, acc)


def zk_component_of(lams: Sequence[Partition], charges: Sequence[int], k: int) -> tuple[int, ...]:
    """Color counts ``v_c`` with the cell color offset by the slot charge."""
    if len(lams) != len(charges):
        raise ValueError("arity mismatch")
    return colors_of_multipartition([Partition(l) for l in lams], charges, k)


def zk_grading(state: Sequence, k: int) -> tuple[int, ...]:
    """Cell colors of colored Maya states, counting the charge staircase too.

    Particles at ``x > 0`` own the contents ``0..x-1`` and holes at ``x <= 0``
    own ``x..-1``.  At fixed charges this is :func:`zk_component_of` plus a
    constant; unlike it, it stays homogeneous under charge-moving operators.
    """
    v = [0] * k
    for f in state:
        occupied = set(f.head) | set(range(f.tail_top, min(f.tail_top, 0) - 1, -1))
        hi = max([f.tail_top] + list(f.head))
        for x in range(1, hi + 1):
            if x in occupied:
                for c in range(x):
                    v[c % k] += 1
        for x in range(f.tail_top + 1, 1):
            if x not in occupied:
                for c in range(x, 0):
                    v[c % k] += 1
    return tuple(v)


def zk_components(r: int, n: int, charges: Sequence[int], k: int) -> dict[tuple, int]:
    """Fixed points of ``M_l(r, n)`` grouped by their Z_k component label."""
    out: Counter = Counter()
    for lams in fixed_points(r, n, charges):
        out[zk_component_of(lams, charges, k)] += 1
    return dict(sorted(out.items()))


# -- level k: the g-map and the diagonal Heisenberg algebra ----------------------------

def g_map(x: SymElement, k: int) -> FockVector:
    """``s_mu -> sign * s_{quotient(mu)}`` as a vector over k-tuples of partitions.

    The sign is the abacus sign of ``mu`` (see :func:`k_sign`); without it
    the power sums do not map to power sums.
    """
    out = FockVector()
    for mu, c in convert(x, "schur").terms.items():
        if k_core(mu, k):
            raise ValueError(f"{mu} has nonempty {k}-core {k_core(mu, k)}")
        out._add_term(k_quotient(mu, k), c * k_sign(mu, k))
    return out


def slot_power_sum(n: int, slot: int, k: int) -> FockVector:
    """``(p_n)_slot`` in the Schur tensor basis of ``Sym^k``."""
    from .partitions import EMPTY, partitions_of

    out = FockVector()
    for lam in partitions_of(n):
        chi = character(lam, Partition((n,)))
        if chi:
            label = tuple(lam if j == slot else EMPTY for j in range(k))
            out._add_term(label, chi)
    return out


def diagonal_heisenberg_bracket(k: int, n: int, m: int, max_degree: int) -> Fraction:
    """Scalar of ``[P(n), P(m)]`` with ``P(n) = sum_i p_i(n)`` on ``Sym^k``.

    Measured on every basis state of total degree ``<= max_degree`` whose
    images stay inside the truncation; raises if the bracket is not scalar.
    """
    from .symfun import BosonicState, colored_p

    if n == 0 or m == 0:
        raise ValueError("modes must be nonzero")
    charges = (0,) * k
    N = max_degree + abs(n) + abs(m)

    def P(mode, state):
        acc = BosonicState(FockVector(), N)
        for i in range(k):
            acc = acc + colored_p(i, mode, state)
        return acc

    seen: set = set()
    for d in range(max_degree + 1):
        for lams in multipartitions_of(d, k):
            v = BosonicState.basis(charges, lams, N)
            comm = P(n, P(m, v)) - P(m, P(n, v))
            label = (charges, tuple(lams))
            scalar = comm.vector.coefficient(label)
            if comm.vector != v.vector * scalar:
                raise ValueError(f"bracket is not scalar on {lams}")
            seen.add(scalar)
    if len(seen) != 1:
        raise ValueError(f"bracket takes several values {sorted(seen)}")
    return seen.pop()


def norm_eta_unit(k: int) -> Fraction:
    """``<eta'(1), eta'(1)>`` for ``1 = sum_i e_i`` on the resolution's fixed points.

    Each fixed point is a single box in one slot, with tangent
    ``t^k + t^{-k}``; cross terms vanish by disjoint support.
    """
    from .partitions import EMPTY

    total = Fraction(0)
    for i in range(k):
        for j in range(k):
            if i != j:
                continue
            lams = tuple(Partition((1,)) if a == i else EMPTY for a in range(k))
            T = resolution_tangent(lams, k)
            _, zero, minus = split_by_subgroup(T, (1,))
            if zero.terms:
                raise ValueError("zero weight on the resolution")
            m = T.dimension // 2
            total += (-1) ** m * (euler_class(T) / euler_class(minus) ** 2).constant()
    return total
