"""Verification suites: every relation of the library checked exactly on a basis sweep.

Each suite takes a :class:`SuiteConfig` (unset fields fall back to the
acceptance-scale defaults) and returns a :class:`SuiteReport` listing one
:class:`Check` per identity with the number of cases examined and the
first counterexample, if any.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

import numpy as np
from scipy import sparse

from . import cliffordgrid
from .correspondence import (
    boson_from_fermion,
    boson_from_fermion_shifted,
    phi,
    psi_degree_shift,
    vertex_psi,
    vertex_psi_star,
)
from .fermions import colored_psi, colored_psi_star, colored_states
from .geometry import (
    check_sign_relation,
    diagonal_heisenberg_bracket,
    diagonal_part,
    fixed_points,
    g_map,
    hook_character,
    localized_inner,
    norm_eta_unit,
    resolution_tangent,
    slot_power_sum,
    tangent_character,
    zk_components,
    zk_fixed_tangent,
    zk_grading,
)
from .glr import (
    E,
    FermionicGlr,
    H,
    _bracket_keys,
    _generator_on_state,
    central,
    dimension_by_energy,
    energy,
    level_of,
)
from .partitions import (
    Partition,
    color_counts,
    compositions,
    from_core_quotient,
    k_core,
    k_quotient,
    multipartition_count,
    multipartitions_of,
    partition_count,
    partitions_of,
)
from .symfun import (
    BosonicState,
    SymElement,
    colored_p,
    epsilon,
    graded_dimension,
    heisenberg_p,
    op_e,
    op_h,
    z,
)
from .vectors import FockVector


@dataclass
class SuiteConfig:
    """Sweep bounds; ``None`` means the suite's own default."""

    degree: int | None = None
    r: int | None = None
    k: int | None = None
    charges: int | None = None
    index: int | None = None
    size: int | None = None
    jobs: int = 1


@dataclass
class Check:
    identity: str
    passed: bool
    checked: int = 0
    value: str = ""
    counterexample: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "checks": [asdict(c) for c in self.checks],
        }


class Tally:
    """Accumulates case counts and the first failure per identity."""

    def __init__(self):
        self.counts: Counter = Counter()
        self.failures: dict = {}
        self.values: dict = {}
        self.order: list = []

    def record(self, identity: str, ok: bool, detail: Callable[[], str] | str = "") -> None:
        if identity not in self.counts and identity not in self.order:
            self.order.append(identity)
        self.counts[identity] += 1
        if not ok and identity not in self.failures:
            self.failures[identity] = detail() if callable(detail) else detail

    def note(self, identity: str, value) -> None:
        if identity not in self.order:
            self.order.append(identity)
        self.values[identity] = str(value)

    def merge(self, other: "Tally") -> None:
        for name in other.order:
            if name not in self.order:
                self.order.append(name)
        self.counts.update(other.counts)
        for name, detail in other.failures.items():
            self.failures.setdefault(name, detail)
        self.values.update(other.values)

    def checks(self) -> list[Check]:
        return [
            Check(
                name,
                name not in self.failures,
                self.counts[name],
                self.values.get(name, ""),
                self.failures.get(name, ""),
            )
            for name in self.order
        ]


def _pick(value, default):
    return default if value is None else value


def _run(name: str, body: Callable[[Tally], None]) -> SuiteReport:
    start = time.perf_counter()
    tally = Tally()
    body(tally)
    return SuiteReport(name, tally.checks(), time.perf_counter() - start)


# -- Clifford -------------------------------------------------------------------

def suite_clifford(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    rs = [cfg.r] if cfg.r else [1, 2, 3]
    size = _pick(cfg.size, _pick(cfg.degree, 6))
    charges = _pick(cfg.charges, 2)
    index = _pick(cfg.index, 5)

    def body(t: Tally) -> None:
        for r in rs:
            name = f"Clifford anticommutators r={r} size<={size} |charge|<={charges} |k|,|l|<={index}"
            relations, points, failures = cliffordgrid.sweep(r, size, charges, index)
            t.record(name, not failures, failures[0] if failures else "")
            t.counts[name] += relations - 1
            t.note(name, f"{relations} relations x {points} states")

    return _run("clifford", body)


# -- Heisenberg -------------------------------------------------------------------

def _power_basis(max_degree: int, N: int):
    for d in range(max_degree + 1):
        for lam in partitions_of(d):
            yield SymElement("power", N, {lam: 1})


def _p_product(modes: Iterable[int], x: SymElement) -> SymElement:
    for n in reversed(list(modes)):
        x = heisenberg_p(n, x)
    return x


def suite_heisenberg(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    N = _pick(cfg.degree, 10)
    modes = min(_pick(cfg.index, 6), N)
    r = _pick(cfg.r, 2)

    def body(t: Tally) -> None:
        for n in range(1, modes + 1):
            for m in range(1, modes + 1):
                for x in _power_basis(N - max(n, m), N):
                    comm = heisenberg_p(n, heisenberg_p(-m, x)) - heisenberg_p(-m, heisenberg_p(n, x))
                    want = x * (n if n == m else 0)
                    t.record("[p(n), p(-m)] = n delta_nm", comm == want, lambda: f"n={n} m={m} x={x}")
                for x in _power_basis(N - n - m, N):
                    for a, b in ((n, m), (-n, -m)):
                        comm = heisenberg_p(a, heisenberg_p(b, x)) - heisenberg_p(b, heisenberg_p(a, x))
                        t.record("[p(a), p(b)] = 0 for a, b of equal sign", not comm, lambda: f"a={a} b={b} x={x}")
        # Schur basis: same identity after basis conversion
        small = min(N, 6)
        for n in range(1, min(modes, small) + 1):
            for d in range(small - n + 1):
                for lam in partitions_of(d):
                    x = SymElement("schur", small, {lam: 1})
                    comm = heisenberg_p(n, heisenberg_p(-n, x)) - heisenberg_p(-n, heisenberg_p(n, x))
                    t.record("[p(n), p(-n)] = n in the Schur basis", comm == x * n, lambda: f"n={n} s_{lam}")
        # h(k), e(k) as exponentials of the modes
        for k in range(1, min(modes, 5) + 1):
            for sign in (1, -1):
                for x in _power_basis(N - k, N):
                    h_side = op_h(sign * k, x)
                    e_side = op_e(sign * k, x)
                    h_exp = SymElement("power", N)
                    e_exp = SymElement("power", N)
                    for mu in partitions_of(k):
                        term = _p_product([-sign * part for part in mu], x) * Fraction(1, z(mu))
                        h_exp = h_exp + term
                        e_exp = e_exp + term * epsilon(mu)
                    t.record("h(k) = sum_mu p(-mu)/z_mu", h_side == h_exp, lambda: f"k={sign * k} x={x}")
                    t.record("e(k) = sum_mu eps_mu p(-mu)/z_mu", e_side == e_exp, lambda: f"k={sign * k} x={x}")
        # colored modes
        degree = max(N - modes, 0)
        charges = (0,) * r
        for d in range(degree + 1):
            for lams in multipartitions_of(d, r):
                v = BosonicState.basis(charges, lams, N)
                for i, j in product(range(r), repeat=2):
                    for n in range(1, modes + 1):
                        for m in range(1, modes + 1):
                            comm = colored_p(i, n, colored_p(j, -m, v)) - colored_p(j, -m, colored_p(i, n, v))
                            want = v * (n if (i == j and n == m) else 0)
                            t.record(
                                f"[p_i(n), p_j(-m)] = n delta_ij delta_nm (r={r})",
                                comm == want and not comm.overflow,
                                lambda: f"i={i} j={j} n={n} m={m} {lams}",
                            )

    return _run("heisenberg", body)


# -- boson-fermion ----------------------------------------------------------------

def _bf_chunk(args) -> Tally:
    states, modes, N = args
    t = Tally()
    for state in states:
        v = FockVector.basis(state)
        b = phi(v, N)
        r = len(state)
        for i in range(r):
            charge = state[i].charge
            got = v.map_basis(boson_from_fermion(i, 0))
            t.record("p_i(0) = charge", got == v * charge, lambda: f"i={i} {state}")
            for n in range(-modes, modes + 1):
                if n == 0:
                    continue
                want = colored_p(i, n, b)
                lhs = phi(v.map_basis(boson_from_fermion(i, n)), N)
                t.record(
                    "phi(sum_k psi_i(k) psi_i*(k+n)) = p_i(n) phi",
                    lhs == want and not want.overflow,
                    lambda: f"i={i} n={n} {state}",
                )
                other = phi(v.map_basis(boson_from_fermion_shifted(i, n)), N)
                t.record(
                    "phi(sum_j psi_i(j+n) psi_i*(j)) = p_i(-n) phi",
                    other == colored_p(i, -n, b),
                    lambda: f"i={i} n={n} {state}",
                )
    return t


def _merge_all(parts: Iterable[Tally]) -> Tally:
    total = Tally()
    for p in parts:
        total.merge(p)
    return total


def _chunked(states: list, jobs: int, *extra) -> list:
    jobs = max(1, jobs)
    return [(states[i::jobs],) + extra for i in range(jobs)]


def _dispatch(worker: Callable, tasks: list, jobs: int) -> Tally:
    """Run ``worker`` on each task, in a process pool when ``jobs > 1``; merging is order-free."""
    if jobs <= 1:
        return _merge_all(worker(a) for a in tasks)
    total = Tally()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(worker, tasks):
            total.merge(part)
    return total


def suite_boson_fermion(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    degree = _pick(cfg.degree, 7)
    modes = _pick(cfg.index, 4)
    bound = _pick(cfg.charges, 2)
    rs = [cfg.r] if cfg.r else [1, 2]

    def body(t: Tally) -> None:
        for r in rs:
            states = list(colored_states(r, range(-bound, bound + 1), max_total_size=degree))
            t.merge(_dispatch(_bf_chunk, _chunked(states, cfg.jobs, modes, degree + modes), cfg.jobs))

    return _run("boson-fermion", body)


# -- vertex operators -----------------------------------------------------------

def _vertex_chunk(args) -> Tally:
    states, index, N = args
    t = Tally()
    for state in states:
        v = FockVector.basis(state)
        b = phi(v, N)
        r = len(state)
        for i in range(r):
            m = state[i].charge
            for k in range(-index, index + 1):
                got = vertex_psi(i, k, b, m)
                want = phi(colored_psi(i, k, state), N)
                t.record(f"vertex psi_i(k) = wedge action (r={r})", got == want and not got.overflow,
                         lambda: f"i={i} k={k} {state}")
                got = vertex_psi_star(i, k, b, m)
                want = phi(colored_psi_star(i, k, state), N)
                t.record(f"vertex psi_i*(k) = wedge action (r={r})", got == want and not got.overflow,
                         lambda: f"i={i} k={k} {state}")
                image = colored_psi(i, k, state)
                for label, _c in image.items():
                    dm, dd = psi_degree_shift(k, m)
                    ok = label[i].charge == m + dm and label[i].size == state[i].size + dd
                    t.record("psi(k): (m, d) -> (m + 1, d + k - m - 1)", ok, lambda: f"k={k} {state}")
    return t


def suite_vertex(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    degree = _pick(cfg.degree, 6)
    index = _pick(cfg.index, 5)
    bound = _pick(cfg.charges, 2)
    rs = [cfg.r] if cfg.r else [1, 2]

    def body(t: Tally) -> None:
        for r in rs:
            if r == 1:
                d, idx, c = degree, index, bound
            else:
                # colored sweep mainly exercises the cross-slot sign
                d, idx, c = min(degree, 4), min(index, 3), min(bound, 1)
            states = list(colored_states(r, range(-c, c + 1), max_total_size=d))
            N = d + idx + c + 1
            t.merge(_dispatch(_vertex_chunk, _chunked(states, cfg.jobs, idx, N), cfg.jobs))

    return _run("vertex", body)


# -- gl(r)^ bracket ---------------------------------------------------------------

class _SparseAction:
    """Integer matrices of generators on a growing index of colored states."""

    def __init__(self, glr: FermionicGlr, domain: list):
        self.glr = glr
        self.index: dict = {}
        self.states: list = []
        for s in domain:
            self._idx(s)
        self.n_domain = len(domain)

    def _idx(self, s) -> int:
        if s not in self.index:
            self.index[s] = len(self.states)
            self.states.append(s)
        return self.index[s]

    def column(self, key, s) -> list:
        if key[0] == "c":
            return [(s, self.glr.k)]
        if key[0] == "d":
            e = Fraction(-energy(s), self.glr.k)
            if e.denominator != 1:
                raise ValueError("d is not integral on this state")
            return [(s, int(e))] if e else []
        _, i, j, a = key
        return list(_generator_on_state(i, j, a * self.glr.k, s))

    def matrix(self, key, columns: list):
        rows, cols, vals = [], [], []
        for c, s in enumerate(columns):
            for label, coeff in self.column(key, s):
                rows.append(self._idx(label))
                cols.append(c)
                vals.append(int(coeff))
        return rows, cols, vals


def _finish(parts, n_rows: int, n_cols: int):
    rows, cols, vals = parts
    return sparse.csr_matrix(
        (np.array(vals, dtype=np.int64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(n_rows, n_cols),
    )


def glr_bracket_sweep(r: int, max_size: int, charge_bound: int, amax: int) -> tuple[Tally, int]:
    domain = list(colored_states(r, range(-charge_bound, charge_bound + 1), max_total_size=max_size))
    act = _SparseAction(FermionicGlr(r), domain)
    keys = [("E", i, j, a) for i in range(r) for j in range(r) for a in range(-amax, amax + 1)]
    keys += [("c",), ("d",)]
    # first images, then every generator on them
    first = {key: act.matrix(key, domain) for key in keys}
    level1 = list(act.states)
    second = {key: act.matrix(key, level1) for key in keys}
    wide_keys = {("E", i, j, a) for i in range(r) for j in range(r) for a in range(-2 * amax, 2 * amax + 1)}
    rhs_parts = {key: act.matrix(key, domain) for key in sorted(wide_keys) + [("c",), ("d",)]}
    total = len(act.states)
    on_domain = {key: _finish(p, total, len(domain)) for key, p in first.items()}
    on_level1 = {key: _finish(p, total, len(level1)) for key, p in second.items()}
    rhs = {key: _finish(p, total, len(domain)) for key, p in rhs_parts.items()}

    t = Tally()
    name = f"[x t^a, y t^b] = [x, y] t^(a+b) + a delta_(a+b,0) tr(xy) c (r={r}, |a|,|b|<={amax}, size<={max_size})"
    for x in keys:
        for y in keys:
            # first images all lie among the level-1 rows
            xy = on_level1[x] @ on_domain[y][: len(level1)]
            yx = on_level1[y] @ on_domain[x][: len(level1)]
            want = sparse.csr_matrix((total, len(domain)), dtype=np.int64)
            for key, coeff in _bracket_keys(x, y).items():
                if coeff.denominator != 1:
                    raise ValueError("non-integral structure constant")
                want = want + rhs[key] * int(coeff)
            diff = (xy - yx - want).tocoo()
            diff.eliminate_zeros()
            t.record(name, diff.nnz == 0, lambda: f"[{x}, {y}] fails on {act.states[int(diff.col[0])]}")
    return t, len(domain)


def suite_glr_bracket(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    r = _pick(cfg.r, 2)
    size = _pick(cfg.size, _pick(cfg.degree, 5))
    bound = _pick(cfg.charges, 1)
    amax = _pick(cfg.index, 3)

    def body(t: Tally) -> None:
        sweep, n_states = glr_bracket_sweep(r, size, bound, amax)
        t.merge(sweep)
        probes = [FockVector.basis(s) for s in colored_states(r, range(-bound, bound + 1), max_total_size=min(size, 4))]
        glr = FermionicGlr(r)
        for color in range(r):
            for n in range(1, amax + 1):
                level = level_of(glr.act, probes, n=n, color=color)
                t.record("central scalar = 1", level == 1, lambda: f"measured {level} at n={n} color={color}")
        t.note("central scalar = 1", 1)

    return _run("glr-bracket", body)


# -- level k ----------------------------------------------------------------------

def suite_level_k(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    ks = [cfg.k] if cfg.k else [2, 3]
    degree = _pick(cfg.degree, 8)
    nmax = _pick(cfg.index, 3)

    def body(t: Tally) -> None:
        for k in ks:
            for r in (1, 2):
                glr = FermionicGlr(r, k)
                probes = [FockVector.basis(s) for s in colored_states(r, range(-1, 2), max_total_size=3)]
                name = f"[h t^n, h t^-n] = k n on wedges (k={k}, r={r})"
                measured = []
                for n in range(1, nmax + 1):
                    scalar = level_of(glr.act, probes, n=n) * n
                    measured.append(f"n={n}: {scalar}")
                    t.record(name, scalar == k * n, lambda: f"n={n}: measured {scalar}")
                t.note(name, ", ".join(measured))
            name = f"[P(n), P(-n)] = k n on Sym^k (k={k})"
            measured = []
            for n in range(1, nmax + 1):
                scalar = diagonal_heisenberg_bracket(k, n, -n, max_degree=3)
                measured.append(f"n={n}: {scalar}")
                t.record(name, scalar == k * n, lambda: f"n={n}: measured {scalar}")
                zero = diagonal_heisenberg_bracket(k, n, n + 1, max_degree=2)
                t.record(f"[P(n), P(m)] = 0 for n + m != 0 (k={k})", zero == 0, lambda: f"n={n}: {zero}")
            t.note(name, ", ".join(measured))
            # g-map
            for n in range(1, degree // k + 1):
                x = SymElement("power", k * n, {Partition((k * n,)): 1})
                want = FockVector()
                for j in range(k):
                    want = want + slot_power_sum(n, j, k)
                t.record(f"g(p_kn) = sum_j (p_n)_j (k={k}, kn<={degree})", g_map(x, k) == want, lambda: f"n={n}")
                images = Counter()
                for mu in partitions_of(k * n):
                    if not k_core(mu, k):
                        img = g_map(SymElement("schur", k * n, {mu: 1}), k)
                        ok = len(img) == 1 and abs(next(iter(img.items()))[1]) == 1
                        images.update(img.labels())
                        t.record(f"g sends Schur functions to signed Schur tensors (k={k})", ok, lambda: f"{mu}")
                t.record(
                    f"g is a bijection onto k-tuples of size n (k={k})",
                    len(images) == multipartition_count(n, k) and all(c == 1 for c in images.values()),
                    lambda: f"n={n}: {len(images)} images",
                )
            # dilated h_i t^n is the colored mode p_i(kn)
            glr = FermionicGlr(2, k)
            for state in colored_states(2, range(-1, 2), max_total_size=3):
                v = FockVector.basis(state)
                N = 3 + k * nmax
                for i in range(2):
                    for n in [m for m in range(-nmax, nmax + 1) if m]:
                        got = phi(glr.act(H(i, n), v), N)
                        want = colored_p(i, k * n, phi(v, N))
                        t.record(f"dilated h_i t^n = p_i(kn) (k={k})", got == want, lambda: f"i={i} n={n} {state}")
            # homogeneity for the Z_k grading
            for i, j, a in product(range(2), range(2), range(-2, 3)):
                op = glr.operator(E(i, j, a))
                shifts = set()
                for state in colored_states(2, range(-1, 2), max_total_size=4):
                    base = zk_grading(state, k)
                    for label, _c in op(state).items():
                        shifts.add(tuple(x - y for x, y in zip(zk_grading(label, k), base)))
                t.record(f"dilated generators are Z_k homogeneous (k={k})", len(shifts) <= 1,
                         lambda: f"E{i}{j} t^{a}: shifts {sorted(shifts)}")
            for state in colored_states(2, range(-1, 2), max_total_size=2):
                v = FockVector.basis(state)
                t.record(f"c acts by k (k={k})", glr.act(central(), v) == v * k, lambda: f"{state}")

    return _run("level-k", body)


# -- geometry ---------------------------------------------------------------------

def _charge_vectors(r: int) -> list[tuple[int, ...]]:
    return [(0,) * r] if r == 1 else [(0,) * r, tuple(range(r))]


def suite_signs(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    rs = [cfg.r] if cfg.r else [1, 2]
    nmax = _pick(cfg.degree, 5)
    k = _pick(cfg.k, 2)

    def body(t: Tally) -> None:
        for r in rs:
            for charges in _charge_vectors(r):
                for n in range(nmax + 1):
                    for example, sign in ((1, "(-1)^((r-1)n)"), (3, "(-1)^(rn)"), (2, "(-1)^m")):
                        rep = check_sign_relation(example, r, n, charges, k if example == 2 else None)
                        name = f"Example {example}: e(N+) = {sign} e(N-) (r={r}, l={charges}, n<={nmax}{', k=' + str(k) if example == 2 else ''})"
                        t.record(name, rep.ok, lambda: f"n={n}: {rep.failures[0]}")
                        t.counts[name] += rep.checked - 1

    return _run("signs", body)


def suite_localization(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    rs = [cfg.r] if cfg.r else [1, 2]
    nmax = _pick(cfg.degree, 5)
    kmax = _pick(cfg.k, 5)

    def body(t: Tally) -> None:
        for r in rs:
            for charges in _charge_vectors(r):
                for n in range(nmax + 1):
                    for lams in fixed_points(r, n, charges):
                        T = tangent_character(lams, charges)
                        t.record(f"dim T = 2rn (r={r})", T.dimension == 2 * r * n, lambda: f"{lams}")
                        t.record(f"alpha=beta part of T = hook formula (r={r})", diagonal_part(T) == hook_character(lams),
                                 lambda: f"{lams}")
                    if n > min(nmax, 4):
                        continue
                    points = list(fixed_points(r, n, charges))
                    for a in points:
                        for b in points:
                            value = localized_inner(a, b, charges)
                            t.record(
                                f"<eta(1_lam), eta(1_mu)> = delta (r={r}, l={charges}, n<={min(nmax, 4)})",
                                value == (1 if a == b else 0),
                                lambda: f"{a}, {b}: {value}",
                            )
        for k in range(1, kmax + 1):
            t.record(f"<eta'(1), eta'(1)> = k (k<={kmax})", norm_eta_unit(k) == k, lambda: f"k={k}: {norm_eta_unit(k)}")

    return _run("localization", body)


def suite_quotient(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    ks = [cfg.k] if cfg.k else [2, 3]
    top = _pick(cfg.degree, 12)

    def body(t: Tally) -> None:
        for k in ks:
            for N in range(top + 1):
                regular = 0
                for lam in partitions_of(N):
                    core = k_core(lam, k)
                    quot = k_quotient(lam, k)
                    counts = color_counts(lam, k)
                    t.record(f"empty k-core <=> equal color counts (k={k})", (not core) == (len(set(counts)) == 1),
                             lambda: f"{lam}: core {core}, colors {counts}")
                    t.record(f"|lam| = |core| + k |quotient| (k={k})", N == sum(core) + k * sum(map(sum, quot)),
                             lambda: f"{lam}")
                    t.record(f"lam rebuilt from core and quotient (k={k})", from_core_quotient(core, quot, k) == lam,
                             lambda: f"{lam}")
                    if core:
                        continue
                    regular += 1
                    t.record(
                        f"zk_fixed_tangent(lam) = resolution_tangent(quotient) (k={k})",
                        zk_fixed_tangent(lam, k) == resolution_tangent(quot, k),
                        lambda: f"{lam}",
                    )
                if N % k == 0:
                    n = N // k
                    t.record(f"#k-regular lam of kn = #k-tuples of size n (k={k}, kn<={top})",
                             regular == multipartition_count(n, k),
                             lambda: f"n={n}: {regular} vs {multipartition_count(n, k)}")

    return _run("quotient", body)


def suite_counting(cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    rs = [cfg.r] if cfg.r else [1, 2]
    ks = [cfg.k] if cfg.k else [2, 3]
    nmax = _pick(cfg.degree, 6)
    emax = max(nmax, 10) if cfg.degree is None else nmax

    def body(t: Tally) -> None:
        for r in rs:
            for charges in _charge_vectors(r):
                for n in range(nmax + 1):
                    count = sum(1 for _ in fixed_points(r, n, charges))
                    splits = sum(math.prod(partition_count(part) for part in comp) for comp in compositions(n, r))
                    t.record(f"#fixed points = sum over splits of prod p(n_a) (r={r})", count == splits,
                             lambda: f"n={n}: {count} vs {splits}")
                    for k in ks:
                        comps = zk_components(r, n, charges, k)
                        t.record(f"Z_k components partition the fixed points (r={r}, k={k})",
                                 sum(comps.values()) == count, lambda: f"n={n}")
                        if r == 1:
                            expected = Counter()
                            for lam in partitions_of(n):
                                core = k_core(lam, k)
                                w = (n - sum(core)) // k
                                v = tuple(c + w for c in color_counts(core, k, charges[0]))
                                expected[v] = multipartition_count(w, k)
                            t.record(f"component size = #k-tuples of the quotient size (r=1, k={k})",
                                     dict(expected) == comps, lambda: f"n={n}")
                        else:
                            conv: Counter = Counter()
                            for comp in compositions(n, r):
                                tables = [zk_components(1, part, (charges[a],), k) for a, part in enumerate(comp)]
                                for choice in product(*[list(tb.items()) for tb in tables]):
                                    v = tuple(map(sum, zip(*[c[0] for c in choice])))
                                    conv[v] += math.prod(c[1] for c in choice)
                            t.record(f"components factor over slots (r={r}, k={k})", dict(conv) == comps,
                                     lambda: f"n={n}")
        dims = dimension_by_energy(1, 0, emax)
        for n in range(emax + 1):
            t.record(f"graded dimension of the r=1 charge-0 block = p(n) (n<={emax})",
                     dims.get(n, 0) == partition_count(n) == graded_dimension(n), lambda: f"n={n}: {dims.get(n)}")

    return _run("counting", body)


SUITES: dict[str, Callable[[SuiteConfig], SuiteReport]] = {
    "clifford": suite_clifford,
    "heisenberg": suite_heisenberg,
    "boson-fermion": suite_boson_fermion,
    "vertex": suite_vertex,
    "glr-bracket": suite_glr_bracket,
    "level-k": suite_level_k,
    "signs": suite_signs,
    "quotient": suite_quotient,
    "localization": suite_localization,
    "counting": suite_counting,
}


def run_suite(name: str, cfg: SuiteConfig = SuiteConfig()) -> list[SuiteReport]:
    if name == "all":
        return [fn(cfg) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return [SUITES[name](cfg)]
