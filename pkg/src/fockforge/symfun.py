"""Truncated graded ring of symmetric functions over Q.

Elements carry a basis tag and a truncation degree ``N``.  Arithmetic is
done in the power-sum basis (a free polynomial algebra); other bases are
reached through cached per-degree transition tables:

* power <-> schur: Murnaghan-Nakayama characters,
* power <-> elementary / homogeneous: Newton-type expansions over ``z_mu``,
* monomial <-> elementary: the 0-1 matrix counts ``e_lam = sum M m_mu``.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Mapping

from .partitions import EMPTY, Partition, partitions_of
from .vectors import FockVector, as_fraction

BASES = ("power", "monomial", "elementary", "homogeneous", "schur")
_ALIASES = {"p": "power", "m": "monomial", "e": "elementary", "h": "homogeneous", "s": "schur"}

Terms = dict  # Partition -> Fraction


def basis_name(tag: str) -> str:
    name = _ALIASES.get(tag, tag)
    if name not in BASES:
        raise ValueError(f"unknown basis {tag!r}; expected one of {', '.join(BASES)}")
    return name


# -- combinatorial coefficients ----------------------------------------------

@lru_cache(maxsize=None)
def z(mu: Partition) -> int:
    """Centraliser order ``prod_i i^{m_i} m_i!``."""
    out = 1
    for part, mult in Counter(mu).items():
        out *= part**mult * factorial(mult)
    return out


def epsilon(mu: Partition) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


def _remove_part(mu: Partition, n: int) -> Partition:
    parts = list(mu)
    parts.remove(n)
    return Partition(parts)


@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """``chi^lam(mu)`` by stripping rim hooks of length ``mu_0`` on the abacus."""
    if sum(lam) != sum(mu):
        raise ValueError("character needs partitions of the same size")
    if not mu:
        return 1
    n, rest = mu[0], Partition(mu[1:])
    length = len(lam)
    beads = [lam.part(j) - j + length for j in range(length)]
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - n
        if target < 1 or target in occupied:  # positions <= 0 hold implicit beads
            continue
        crossed = sum(1 for c in beads if target < c < b)
        moved = sorted([c for c in beads if c != b] + [target], reverse=True)
        smaller = Partition([c - length + j for j, c in enumerate(moved)])
        total += (-1) ** crossed * character(smaller, rest)
    return total


@lru_cache(maxsize=None)
def zero_one_count(rows: Partition, cols: Partition) -> int:
    """Number of 0-1 matrices with row sums ``rows`` and column sums ``cols``."""
    if sum(rows) != sum(cols):
        return 0
    return _fill(tuple(rows), tuple(sorted(cols, reverse=True)))


@lru_cache(maxsize=None)
def _fill(rows: tuple, cols: tuple) -> int:
    if not rows:
        return 1 if not any(cols) else 0
    need, rest = rows[0], rows[1:]
    groups = sorted(Counter(c for c in cols if c > 0).items())
    total = 0

    def choose(idx, remaining, ways, taken):
        nonlocal total
        if idx == len(groups):
            if remaining == 0:
                new_cols = []
                for (value, count), t in zip(groups, taken):
                    new_cols += [value - 1] * t + [value] * (count - t)
                total += ways * _fill(rest, tuple(sorted((c for c in new_cols if c), reverse=True)))
            return
        value, count = groups[idx]
        for t in range(min(count, remaining) + 1):
            choose(idx + 1, remaining - t, ways * comb(count, t), taken + [t])

    choose(0, need, 1, [])
    return total


# -- per-degree transition tables -------------------------------------------

def _p_product(a: Mapping, b: Mapping) -> Terms:
    out: Terms = {}
    for mu, x in a.items():
        for nu, y in b.items():
            key = _merge(mu, nu)
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _hn_power(n: int, signed: bool) -> tuple:
    """``h_n`` (or ``e_n`` when signed) expanded in power sums."""
    return tuple(
        (mu, Fraction(epsilon(mu) if signed else 1, z(mu))) for mu in partitions_of(n)
    )


def _product_of_parts(lam: Partition, signed: bool) -> Terms:
    acc: Terms = {EMPTY: Fraction(1)}
    for part in lam:
        acc = _p_product(acc, dict(_hn_power(part, signed)))
    return acc


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse."""
    n = len(matrix)
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


@lru_cache(maxsize=None)
def _table(src: str, dst: str, n: int) -> dict:
    """Transition ``b_src(lam) = sum_mu T[lam][mu] b_dst(mu)`` in degree ``n``."""
    parts = list(partitions_of(n))
    if src == dst:
        return {lam: {lam: Fraction(1)} for lam in parts}
    if dst == "power":
        if src == "schur":
            rows = {lam: {mu: Fraction(character(lam, mu), z(mu)) for mu in parts} for lam in parts}
        elif src in ("homogeneous", "elementary"):
            rows = {lam: _product_of_parts(lam, src == "elementary") for lam in parts}
        elif src == "monomial":
            # m = M^{-1} e, then e -> p
            e_of_m = _table("monomial", "elementary", n)
            rows = {}
            for lam in parts:
                acc: Terms = {}
                for nu, c in e_of_m[lam].items():
                    for mu, d in _table("elementary", "power", n)[nu].items():
                        acc[mu] = acc.get(mu, 0) + c * d
                rows[lam] = acc
        else:
            raise ValueError(src)
        return {lam: {mu: c for mu, c in row.items() if c} for lam, row in rows.items()}
    if src == "power":
        if dst == "schur":
            return {mu: {lam: Fraction(character(lam, mu)) for lam in parts if character(lam, mu)} for mu in parts}
        if dst == "monomial":
            # p -> e, then e_lam = sum M_{lam,nu} m_nu
            out = {}
            for mu in parts:
                acc: Terms = {}
                for lam, c in _table("power", "elementary", n)[mu].items():
                    for nu in parts:
                        cnt = zero_one_count(lam, nu)
                        if cnt:
                            acc[nu] = acc.get(nu, 0) + c * cnt
                out[mu] = {k: v for k, v in acc.items() if v}
            return out
        return _inverse_table(dst, "power", n)
    if (src, dst) == ("monomial", "elementary"):
        matrix = [[Fraction(zero_one_count(lam, nu)) for nu in parts] for lam in parts]
        inv = _invert(matrix)  # rows: m_nu in terms of e
        return {
            nu: {lam: inv[a][b] for b, lam in enumerate(parts) if inv[a][b]}
            for a, nu in enumerate(parts)
        }
    # generic route through power sums
    out = {}
    for lam in parts:
        acc: Terms = {}
        for mu, c in _table(src, "power", n)[lam].items():
            for nu, d in _table("power", dst, n)[mu].items():
                acc[nu] = acc.get(nu, 0) + c * d
        out[lam] = {k: v for k, v in acc.items() if v}
    return out


def _inverse_table(src: str, dst: str, n: int) -> dict:
    parts = list(partitions_of(n))
    forward = _table(src, dst, n)
    matrix = [[forward[lam].get(mu, Fraction(0)) for mu in parts] for lam in parts]
    inv = _invert(matrix)
    return {mu: {lam: inv[a][b] for b, lam in enumerate(parts) if inv[a][b]} for a, mu in enumerate(parts)}


def _convert_terms(terms: Mapping, src: str, dst: str) -> Terms:
    if src == dst:
        return dict(terms)
    out: Terms = {}
    for lam, c in terms.items():
        for mu, d in _table(src, dst, sum(lam))[lam].items():
            out[mu] = out.get(mu, 0) + c * d
    return {k: v for k, v in out.items() if v}


# -- elements ---------------------------------------------------------------

class SymElement:
    """Symmetric function truncated at degree ``N`` in a tagged basis."""

    __slots__ = ("basis", "N", "terms", "overflow")

    def __init__(self, basis: str, N: int, terms: Mapping | Iterable = (), overflow: bool = False):
        self.basis = basis_name(basis)
        if N < 0:
            raise ValueError("truncation degree must be non-negative")
        self.N = N
        clean: Terms = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = Partition(lam)
            if sum(lam) > N:
                raise ValueError(f"term {lam} exceeds truncation degree {N}")
            c = as_fraction(c)
            clean[lam] = clean.get(lam, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}
        self.overflow = overflow

    @classmethod
    def basis_element(cls, basis: str, lam, N: int, coeff=1) -> "SymElement":
        return cls(basis, N, {Partition(lam): coeff})

    @classmethod
    def one(cls, N: int, basis: str = "power") -> "SymElement":
        return cls(basis, N, {EMPTY: 1})

    def to(self, basis: str) -> "SymElement":
        return convert(self, basis)

    def power_terms(self) -> Terms:
        return _convert_terms(self.terms, self.basis, "power")

    def _compatible(self, other: "SymElement") -> None:
        if not isinstance(other, SymElement):
            raise TypeError("expected a SymElement")
        if other.N != self.N:
            raise ValueError(f"truncation mismatch: N={self.N} vs N={other.N}")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._compatible(other)
        acc = dict(self.terms)
        for lam, c in _convert_terms(other.terms, other.basis, self.basis).items():
            acc[lam] = acc.get(lam, 0) + c
        return SymElement(self.basis, self.N, acc, self.overflow or other.overflow)

    def __neg__(self) -> "SymElement":
        return SymElement(self.basis, self.N, {k: -v for k, v in self.terms.items()}, self.overflow)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other) -> "SymElement":
        if isinstance(other, SymElement):
            return multiply(self, other)
        s = as_fraction(other)
        return SymElement(self.basis, self.N, {k: v * s for k, v in self.terms.items()}, self.overflow)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, SymElement):
            return self.N == other.N and self.power_terms() == other.power_terms()
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # mutable-looking value type; compare only

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{self.basis[0]}{lam}" for lam, c in sorted(self.terms.items(), reverse=True))
        return f"SymElement(N={self.N}, {body or '0'})"

    # JSON ---------------------------------------------------------------
    def to_json(self) -> str:
        terms = [
            {"partition": list(lam), "coeff": format_rational(c)}
            for lam, c in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0]), reverse=False)
        ]
        return json.dumps({"basis": self.basis, "N": self.N, "terms": terms}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SymElement":
        data = json.loads(text)
        return cls(
            data["basis"],
            int(data["N"]),
            {Partition(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]},
        )


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def convert(x: SymElement, target: str) -> SymElement:
    target = basis_name(target)
    return SymElement(target, x.N, _convert_terms(x.terms, x.basis, target), x.overflow)


def _truncate(terms: Mapping, N: int) -> tuple[Terms, bool]:
    kept = {k: v for k, v in terms.items() if v and sum(k) <= N}
    return kept, len(kept) != sum(1 for v in terms.values() if v)


def multiply(x: SymElement, y: SymElement) -> SymElement:
    x._compatible(y)
    prod = _p_product(x.power_terms(), y.power_terms())
    kept, over = _truncate(prod, x.N)
    out = SymElement("power", x.N, kept, over or x.overflow or y.overflow)
    return convert(out, x.basis)


def hall_inner(x: SymElement, y: SymElement) -> Fraction:
    """``<p_lam, p_mu> = z_lam delta``, equivalently Schur functions orthonormal."""
    a, b = x.power_terms(), y.power_terms()
    return sum((c * b.get(lam, 0) * z(lam) for lam, c in a.items()), Fraction(0))


# -- operators on power-sum terms -----------------------------------------------

def _mul_p_terms(terms: Mapping, n: int) -> Terms:
    return {_merge(lam, Partition((n,))): c for lam, c in terms.items()}


def _diff_p_terms(terms: Mapping, n: int) -> Terms:
    """``n * d/dp_n``."""
    out: Terms = {}
    for lam, c in terms.items():
        mult = lam.count(n)
        if mult:
            key = _remove_part(lam, n)
            out[key] = out.get(key, 0) + c * n * mult
    return out


def _skew_by_power(terms: Mapping, f_power: Mapping) -> Terms:
    """Apply ``f^perp`` where ``f`` is given in power sums (``p_n^perp = n d/dp_n``)."""
    out: Terms = {}
    for mu, c in f_power.items():
        cur = dict(terms)
        for part in mu:
            cur = _diff_p_terms(cur, part)
            if not cur:
                break
        for lam, d in cur.items():
            out[lam] = out.get(lam, 0) + c * d
    return {k: v for k, v in out.items() if v}


def _check_degree(n: int, N: int) -> None:
    if abs(n) > N:
        raise ValueError(f"|{n}| exceeds truncation degree {N}")


def _apply_power(x: SymElement, fn: Callable[[Terms], Terms]) -> SymElement:
    kept, over = _truncate(fn(x.power_terms()), x.N)
    return convert(SymElement("power", x.N, kept, over or x.overflow), x.basis)


def heisenberg_p(n: int, x: SymElement) -> SymElement:
    """``p(n)``: ``n d/dp_n`` for ``n > 0`` and multiplication by ``p_{-n}`` for ``n < 0``.

    Positive modes annihilate ``1`` so that ``[p(n), p(m)] = n delta_{n+m,0}``
    holds with ``p(n)`` and ``p(-n)`` Hall-adjoint.
    """
    if n == 0:
        raise ValueError("p(0) acts on the charge, not on Sym")
    _check_degree(n, x.N)
    if n > 0:
        return _apply_power(x, lambda t: _diff_p_terms(t, n))
    return _apply_power(x, lambda t: _mul_p_terms(t, -n))


def _family_op(k: int, x: SymElement, signed: bool) -> SymElement:
    _check_degree(k, x.N)
    if k == 0:
        return x
    f = dict(_hn_power(abs(k), signed))
    if k > 0:
        return _apply_power(x, lambda t: _p_product(t, f))
    return _apply_power(x, lambda t: _skew_by_power(t, f))


def op_h(k: int, x: SymElement) -> SymElement:
    """``h(k)``: multiplication by ``h_k`` (k > 0), skewing by ``h_{-k}`` (k < 0); ``h(0) = 1``."""
    return _family_op(k, x, signed=False)


def op_e(k: int, x: SymElement) -> SymElement:
    return _family_op(k, x, signed=True)


# -- Schur-basis kernels used by the bosonic Fock space -------------------------

@lru_cache(maxsize=None)
def schur_action(op: tuple, lam: Partition, N: int) -> tuple:
    """Matrix column of a slot operator in the Schur basis.

    ``op`` is ``("p", n)``, ``("h", k)`` or ``("e", k)``.  Returns a tuple of
    ``(Partition, Fraction)`` pairs, truncated at degree ``N``.
    """
    kind, n = op
    x = SymElement("schur", N, {lam: 1})
    if kind == "p":
        y = heisenberg_p(n, x)
    elif kind == "h":
        y = op_h(n, x)
    elif kind == "e":
        y = op_e(n, x)
    else:
        raise ValueError(f"unknown slot operator {op!r}")
    return tuple(sorted(convert(y, "schur").terms.items()))


def graded_dimension(n: int) -> int:
    """Dimension of Sym in degree ``n`` read off the Schur table."""
    return len(_table("schur", "schur", n))


# -- r-colored bosonic Fock space ----------------------------------------------

class BosonicState:
    """Element of ``B^r``: combinations of ``q^{l} s_{lam_0} x ... x s_{lam_{r-1}}``.

    Labels are ``(charges, shapes)`` pairs; the labels are orthonormal.
    """

    __slots__ = ("vector", "N", "overflow")

    def __init__(self, vector: FockVector, N: int, overflow: bool = False):
        self.vector = vector
        self.N = N
        self.overflow = overflow

    @classmethod
    def basis(cls, charges, shapes, N: int, coeff=1) -> "BosonicState":
        charges = tuple(int(c) for c in charges)
        shapes = tuple(Partition(s) for s in shapes)
        if len(charges) != len(shapes):
            raise ValueError("charge vector and shape tuple must have equal arity")
        if any(sum(s) > N for s in shapes):
            raise ValueError(f"slot degree exceeds N={N}")
        return cls(FockVector.basis((charges, shapes), coeff), N)

    def __eq__(self, other) -> bool:
        if isinstance(other, BosonicState):
            return self.vector == other.vector
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "BosonicState") -> "BosonicState":
        if self.N != other.N:
            raise ValueError("truncation mismatch")
        return BosonicState(self.vector + other.vector, self.N, self.overflow or other.overflow)

    def __sub__(self, other: "BosonicState") -> "BosonicState":
        return self + other * -1

    def __mul__(self, s) -> "BosonicState":
        return BosonicState(self.vector * s, self.N, self.overflow)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"BosonicState(N={self.N}, {self.vector!r})"


def bosonic_inner(x: BosonicState, y: BosonicState) -> Fraction:
    from .vectors import inner

    return inner(x.vector, y.vector)


def _slot_check(i: int, label) -> None:
    if not 0 <= i < len(label[0]):
        raise ValueError(f"color {i} out of range for r={len(label[0])}")


def shift_q(i: int, delta: int, x: BosonicState) -> BosonicState:
    """Change the charge of slot ``i`` by ``delta``."""

    def op(label):
        _slot_check(i, label)
        charges, shapes = label
        new = charges[:i] + (charges[i] + delta,) + charges[i + 1:]
        return FockVector.basis((new, shapes))

    return BosonicState(x.vector.map_basis(op), x.N, x.overflow)


def colored_slot_op(i: int, op: tuple, x: BosonicState) -> BosonicState:
    """Apply a single-slot Sym operator (see :func:`schur_action`) to slot ``i``."""
    over = False
    N = x.N

    def act(label):
        nonlocal over
        _slot_check(i, label)
        charges, shapes = label
        lam = shapes[i]
        # degree change of the operator: p raises for n < 0, h/e raise for n > 0
        step = -op[1] if op[0] == "p" else op[1]
        out = FockVector()
        if step > 0 and sum(lam) + step > N:
            over = True
            return out
        if step < 0 and sum(lam) + step < 0:
            return out
        for mu, c in schur_action(op, lam, N):
            out._add_term((charges, shapes[:i] + (mu,) + shapes[i + 1:]), c)
        return out

    vec = x.vector.map_basis(act)
    return BosonicState(vec, N, x.overflow or over)


def colored_p(i: int, n: int, x: BosonicState) -> BosonicState:
    return colored_slot_op(i, ("p", n), x)


def colored_h(i: int, k: int, x: BosonicState) -> BosonicState:
    return colored_slot_op(i, ("h", k), x)


def colored_e(i: int, k: int, x: BosonicState) -> BosonicState:
    return colored_slot_op(i, ("e", k), x)
