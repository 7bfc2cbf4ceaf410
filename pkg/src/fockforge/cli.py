"""Command-line front end: ``fockforge verify|compute|character|tangent|quotient-check``.

Exit status is 0 when every checked identity holds, 1 when one fails and
2 on usage errors (bad syntax, arity mismatch, degree cap exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .fermions import dimension_vector_of, format_maya, maya_from_partition, parse_maya
from .geometry import (
    fixed_points,
    g_map,
    resolution_tangent,
    tangent_character,
    zk_component_of,
    zk_fixed_tangent,
    zk_invariant,
)
from .glr import graded_character
from .partitions import Partition, k_core, k_quotient, multipartition_count, parse_partition, partitions_of
from .symfun import SymElement, format_rational
from .verify import SUITES, SuiteConfig, run_suite

DEFAULT_CAP = 14


class UsageError(Exception):
    pass


def degree_cap() -> int:
    raw = os.environ.get("FOCKFORGE_MAX_DEGREE")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"FOCKFORGE_MAX_DEGREE must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("FOCKFORGE_MAX_DEGREE must be positive")
    return cap


@dataclass
class RunConfig:
    command: str
    degree: int | None = None
    r: int | None = None
    k: int | None = None
    charges: int | None = None
    index: int | None = None
    size: int | None = None
    fmt: str = "text"
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        for name in ("degree", "r", "k", "index", "size"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise UsageError(f"--{name} must be positive, got {value}")
        if self.charges is not None and self.charges < 0:
            raise UsageError(f"--charges must be non-negative, got {self.charges}")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        cap = degree_cap()
        for name in ("degree", "size"):
            value = getattr(self, name)
            if value is not None and value > cap:
                raise UsageError(f"--{name} {value} exceeds the degree cap {cap} (set FOCKFORGE_MAX_DEGREE)")

    def suite_config(self) -> SuiteConfig:
        return SuiteConfig(self.degree, self.r, self.k, self.charges, self.index, self.size, self.jobs)


# -- output -------------------------------------------------------------------

def _emit(fmt: str, payload, rows: list[list], header: list[str], text: str) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    return text if text.endswith("\n") else text + "\n"


def _partition_text(lam) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def _multi_text(lams) -> str:
    return "(" + ",".join(_partition_text(l) for l in lams) + ")"


def _character_terms(chi) -> list[dict]:
    return json.loads(chi.to_json())["terms"]


# -- commands ---------------------------------------------------------------------

def cmd_verify(suite: str, cfg: RunConfig) -> tuple[int, str]:
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    reports = run_suite(suite, cfg.suite_config())
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "suites": []}
    rows = []
    lines = []
    for rep in reports:
        d = rep.to_dict()
        d.pop("seconds")  # keeps output byte-deterministic
        payload["suites"].append(d)
        lines.append(f"== {rep.suite}: {'PASS' if rep.ok else 'FAIL'}")
        for c in rep.checks:
            status = "PASS" if c.passed else "FAIL"
            rows.append([rep.suite, c.identity, status, c.checked, c.value, c.counterexample])
            line = f"{status}  {c.identity}  [{c.checked} cases]"
            if c.value:
                line += f"  value: {c.value}"
            if c.counterexample:
                line += f"\n      counterexample: {c.counterexample}"
            lines.append(line)
    lines.append("ALL PASS" if ok else "FAILURES PRESENT")
    header = ["suite", "identity", "status", "checked", "value", "counterexample"]
    return (0 if ok else 1), _emit(cfg.fmt, payload, rows, header, "\n".join(lines))


def _need(cfg: RunConfig, name: str):
    value = cfg.extra.get(name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _partition_arg(cfg: RunConfig):
    try:
        lam = parse_partition(_need(cfg, "partition"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if sum(lam) > degree_cap():
        raise UsageError(f"partition size {sum(lam)} exceeds the degree cap {degree_cap()}")
    return lam


def _charge_vector(text: str | None, r: int) -> tuple[int, ...]:
    if text is None:
        return (0,) * r
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"malformed charge vector {text!r}: expected l0,l1,...") from None
    if len(values) != r:
        raise UsageError(f"charge vector {text!r} has {len(values)} entries, expected r={r}")
    return values


def compute_core_quotient(cfg: RunConfig, what: str) -> str:
    k = cfg.k or 2
    lam = _partition_arg(cfg)
    core = k_core(lam, k)
    quot = k_quotient(lam, k)
    payload = {"partition": list(lam), "k": k, "core": list(core), "quotient": [list(q) for q in quot]}
    text = f"core {_partition_text(core)}"
    if what == "k-quotient":
        text += f"\nquotient {_multi_text(quot)}"
    row = [_partition_text(lam), k, _partition_text(core), _multi_text(quot)]
    return _emit(cfg.fmt, payload, [row], ["partition", "k", "core", "quotient"], text)


def compute_maya(cfg: RunConfig) -> str:
    state_text = cfg.extra.get("state")
    try:
        if state_text is not None:
            state = parse_maya(state_text)
        else:
            state = maya_from_partition(_partition_arg(cfg), cfg.extra.get("charge") or 0)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dim = dimension_vector_of(state)
    payload = {
        "charge": state.charge,
        "partition": list(state.shape),
        "wedge": list(state.head),
        "dimension_vector": {str(k): n for k, n in dim.entries},
    }
    text = f"{format_maya(state)}\npartition {_partition_text(state.shape)}\ndimension vector " + (
        " ".join(f"v{k}={n}" for k, n in dim.entries) or "0"
    )
    row = [state.charge, _partition_text(state.shape), format_maya(state)]
    return _emit(cfg.fmt, payload, [row], ["charge", "partition", "state"], text)


def compute_tangent(cfg: RunConfig) -> str:
    r = cfg.r or 1
    n = cfg.extra.get("n")
    if n is None:
        raise UsageError("--n is required")
    if n < 0 or n > degree_cap():
        raise UsageError(f"--n must lie in [0, {degree_cap()}]")
    charges = _charge_vector(cfg.extra.get("charge_vector"), r)
    zk = cfg.extra.get("zk")
    entries, rows, lines = [], [], []
    for lams in fixed_points(r, n, charges):
        chi = tangent_character(lams, charges)
        entry = {"multipartition": [list(l) for l in lams]}
        if zk:
            chi = zk_invariant(chi, zk)
            entry["component"] = list(zk_component_of(lams, charges, zk))
        entry["character"] = {"terms": _character_terms(chi)}
        entries.append(entry)
        label = _multi_text(lams)
        lines.append(f"{label}: {chi}")
        for term in entry["character"]["terms"]:
            rows.append([label, term["t"], " ".join(map(str, term["e"])), term["mult"]])
    payload = {"r": r, "n": n, "charges": list(charges), "zk": zk, "fixed_points": entries}
    return _emit(cfg.fmt, payload, rows, ["multipartition", "t", "e", "mult"], "\n".join(lines))


def compute_character(cfg: RunConfig) -> str:
    r = cfg.r or 1
    m = cfg.extra.get("charge") or 0
    top = cfg.extra.get("max_energy")
    if top is None:
        raise UsageError("--max-energy is required")
    if top < 0 or top > degree_cap():
        raise UsageError(f"--max-energy must lie in [0, {degree_cap()}]")
    table = graded_character(r, m, top)
    payload = {
        "r": r,
        "charge": m,
        "levels": [
            {"energy": e, "dimension": sum(w.values()), "weights": [{"h": list(h), "count": c} for h, c in w.items()]}
            for e, w in table.items()
        ],
    }
    rows = [[e, " ".join(map(str, h)), c] for e, w in table.items() for h, c in w.items()]
    lines = [f"energy {e}: dimension {sum(w.values())}" for e, w in table.items()]
    return _emit(cfg.fmt, payload, rows, ["energy", "weight", "count"], "\n".join(lines))


def compute_g_map(cfg: RunConfig) -> str:
    k = cfg.k or 2
    power = cfg.extra.get("power")
    if power is not None:
        if power < 0 or power > degree_cap():
            raise UsageError(f"--power must lie in [0, {degree_cap()}]")
        x = SymElement("power", power, {Partition((power,) if power else ()): 1})
        source = f"p_{power}"
    else:
        lam = _partition_arg(cfg)
        x = SymElement("schur", sum(lam), {lam: 1})
        source = f"s_{_partition_text(lam)}"
    try:
        image = g_map(x, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    terms = sorted(image.items(), key=lambda kv: ([sum(l) for l in kv[0]], [tuple(-p for p in l) for l in kv[0]]))
    payload = {
        "k": k,
        "source": source,
        "terms": [{"tensor": [list(l) for l in lab], "coeff": format_rational(c)} for lab, c in terms],
    }
    rows = [[_multi_text(lab), format_rational(c)] for lab, c in terms]
    text = f"g({source}) = " + (" + ".join(f"{format_rational(c)}*s{_multi_text(lab)}" for lab, c in terms) or "0")
    return _emit(cfg.fmt, payload, rows, ["tensor", "coeff"], text.replace("+ -", "- "))


def quotient_check(cfg: RunConfig) -> tuple[int, str]:
    k = cfg.k or 2
    top = cfg.extra.get("max") or 12
    if top > degree_cap():
        raise UsageError(f"--max {top} exceeds the degree cap {degree_cap()}")
    rows, lines, ok = [], [], True
    for n in range(top // k + 1):
        regular = [lam for lam in partitions_of(k * n) if not k_core(lam, k)]
        matched = sum(zk_fixed_tangent(lam, k) == resolution_tangent(k_quotient(lam, k), k) for lam in regular)
        count_ok = len(regular) == multipartition_count(n, k)
        row_ok = count_ok and matched == len(regular)
        ok &= row_ok
        rows.append([k, k * n, len(regular), multipartition_count(n, k), matched, "PASS" if row_ok else "FAIL"])
        lines.append(
            f"kn={k * n}: {len(regular)} k-regular, {multipartition_count(n, k)} k-tuples, "
            f"{matched} characters matched  {'PASS' if row_ok else 'FAIL'}"
        )
    header = ["k", "kn", "k_regular", "k_tuples", "characters_matched", "status"]
    payload = {"k": k, "max": top, "ok": ok, "rows": [dict(zip(header, row)) for row in rows]}
    return (0 if ok else 1), _emit(cfg.fmt, payload, rows, header, "\n".join(lines))


COMPUTE = ("k-core", "k-quotient", "maya", "tangent", "character", "g-map")


def cmd_compute(what: str, cfg: RunConfig) -> tuple[int, str]:
    if what in ("k-core", "k-quotient"):
        return 0, compute_core_quotient(cfg, what)
    if what == "maya":
        return 0, compute_maya(cfg)
    if what == "tangent":
        return 0, compute_tangent(cfg)
    if what == "character":
        return 0, compute_character(cfg)
    if what == "g-map":
        return 0, compute_g_map(cfg)
    raise UsageError(f"unknown computation {what!r}; choose from {', '.join(COMPUTE)}")


# -- argument parsing ---------------------------------------------------------------

def _format_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output")
    group.add_argument("--format", dest="fmt", choices=["json", "csv", "text"])
    p.set_defaults(fmt="text")


def _compute_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--partition", help="partition as [a,b,c]")
    p.add_argument("--state", help="wedge as 'charge=<m>; wedge=[i0,i1,...]'")
    p.add_argument("--charge", type=int, help="charge of a single wedge or of the character block")
    p.add_argument("--charges", dest="charge_vector", help="charge vector l0,l1,...")
    p.add_argument("--zk", type=int, help="restrict to the Z_k-invariant part")
    p.add_argument("--max-energy", type=int)
    p.add_argument("--power", type=int, help="g-map of the power sum p_N")
    _format_flags(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fockforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of {', '.join(list(SUITES) + ['all'])}")
    v.add_argument("--degree", type=int, help="main degree bound of the suite")
    v.add_argument("--size", type=int, help="per-slot size bound (clifford, glr-bracket)")
    v.add_argument("--r", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--charges", type=int, help="bound on |charge|")
    v.add_argument("--index", type=int, help="bound on fermion indices or modes")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    _format_flags(v)

    c = sub.add_parser("compute", help="compute a single object")
    c.add_argument("what", help=f"one of {', '.join(COMPUTE)}")
    _compute_flags(c)

    for name in ("character", "tangent"):
        alias = sub.add_parser(name, help=f"same as 'compute {name}'")
        _compute_flags(alias)

    q = sub.add_parser("quotient-check", help="k-quotient character theorem up to degree --max")
    q.add_argument("--k", type=int)
    q.add_argument("--max", type=int)
    _format_flags(q)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    known = {"degree", "r", "k", "charges", "index", "size", "jobs", "fmt", "command"}
    extra = {key: val for key, val in vars(args).items() if key not in known}
    return RunConfig(
        command=args.command,
        degree=getattr(args, "degree", None),
        r=getattr(args, "r", None),
        k=getattr(args, "k", None),
        charges=getattr(args, "charges", None),
        index=getattr(args, "index", None),
        size=getattr(args, "size", None),
        fmt=args.fmt,
        jobs=getattr(args, "jobs", 1),
        extra=extra,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _config(args)
    try:
        cfg.validate()
        if args.command == "verify":
            status, out = cmd_verify(args.suite, cfg)
        elif args.command == "compute":
            status, out = cmd_compute(args.what, cfg)
        elif args.command == "quotient-check":
            status, out = quotient_check(cfg)
        else:
            status, out = cmd_compute(args.command, cfg)
    except UsageError as exc:
        print(f"fockforge: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
