"""Tabulate Z_k components of fixed points against level-k weight spaces.

For each (r, k, n) and charge vector, every fixed point of M_l(r, n) is
labelled by its color vector v.  The same fixed points, read as colored
wedges, carry the homogeneous Z_k grading of the dilated gl(r)^ action;
the two labels must differ by a constant.  Output is CSV:
``r,k,n,charges,component,count,grading_shift`` where the last column is
the largest deviation seen (0 when the labels agree).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from fockforge.fermions import MayaState
from fockforge.geometry import fixed_points, zk_component_of, zk_grading


@dataclass
class Config:
    max_r: int = 2
    ks: tuple[int, ...] = (2, 3)
    max_n: int = 6


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-r", type=int, default=Config.max_r)
    p.add_argument("--ks", type=int, nargs="+", default=list(Config.ks))
    p.add_argument("--max-n", type=int, default=Config.max_n)
    a = p.parse_args()
    cfg = Config(a.max_r, tuple(a.ks), a.max_n)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["r", "k", "n", "charges", "component", "count", "grading_shift"])
    status = 0
    for r in range(1, cfg.max_r + 1):
        for k in cfg.ks:
            for charges in [(0,) * r] + ([tuple(range(r))] if r > 1 else []):
                vac = tuple(MayaState(c) for c in charges)
                base = zk_grading(vac, k)
                for n in range(cfg.max_n + 1):
                    comps: dict = {}
                    for lams in fixed_points(r, n, charges):
                        v = zk_component_of(lams, charges, k)
                        graded = zk_grading(tuple(MayaState(c, l) for c, l in zip(charges, lams)), k)
                        shift = tuple(x - y - z for x, y, z in zip(graded, v, base))
                        if any(shift):
                            status = 1
                        count, worst = comps.get(v, (0, 0))
                        comps[v] = (count + 1, max(worst, max(map(abs, shift))))
                    for v, (count, worst) in sorted(comps.items()):
                        w.writerow([r, k, n, " ".join(map(str, charges)), " ".join(map(str, v)), count, worst])
    return status


if __name__ == "__main__":
    sys.exit(main())
