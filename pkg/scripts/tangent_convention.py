"""Compare the hook-based tangent character with the two-parameter Ext formula.

The Ext formula depends on (t1, t2); restricting to a one-parameter torus
can use t1 = t, t2 = 1/t or the swap.  This script counts, for each choice,
how many fixed points agree with ``tangent_character``.  One choice should
agree everywhere; that pins the t <-> 1/t ambiguity of the relative hooks.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from fockforge.geometry import fixed_points, tangent_character


@dataclass
class Config:
    max_r: int = 2
    max_n: int = 4
    shifted: bool = True  # also use the charge vector (0, 1, ..., r-1)


def ext_character(lams, charges, swap: bool) -> dict:
    r = len(lams)
    acc: Counter = Counter()

    def cells(lam):
        return [(-i, -j) for i, row in enumerate(lam) for j in range(row)]

    def add(x1, x2, b, a, mult):
        e = [0] * r
        e[b] += 1
        e[a] -= 1
        t = (x2 - x1) if swap else (x1 - x2)
        acc[(t + charges[b] - charges[a],) + tuple(e)] += mult

    for a in range(r):
        for b in range(r):
            va, vb = cells(lams[a]), cells(lams[b])
            for x in vb:
                add(*x, b, a, 1)
            for x in va:
                add(1 - x[0], 1 - x[1], b, a, 1)
            for x in va:
                for y in vb:
                    for d1, d2, s in ((0, 0, -1), (1, 0, 1), (0, 1, 1), (1, 1, -1)):
                        add(y[0] - x[0] + d1, y[1] - x[1] + d2, b, a, s)
    return {k: v for k, v in acc.items() if v}


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-r", type=int, default=Config.max_r)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})
    tally = Counter()
    total = 0
    for r in range(1, cfg.max_r + 1):
        vectors = [(0,) * r] + ([tuple(range(r))] if cfg.shifted and r > 1 else [])
        for charges in vectors:
            for n in range(cfg.max_n + 1):
                for lams in fixed_points(r, n, charges):
                    total += 1
                    chi = tangent_character(lams, charges).terms
                    for swap in (False, True):
                        tally[swap] += chi == ext_character(lams, charges, swap)
    print(f"fixed points checked: {total}")
    print(f"t1 = t, t2 = 1/t : {tally[False]}/{total} agree")
    print(f"t1 = 1/t, t2 = t : {tally[True]}/{total} agree")
    return 0 if tally[False] == total else 1


if __name__ == "__main__":
    sys.exit(main())
