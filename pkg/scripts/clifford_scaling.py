"""Time the vectorised Clifford sweep as the slot size and the rank grow.

Writes ``r,size,charges,index,relations,states,failures,seconds`` rows to
stdout or to ``--out``.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from fockforge.cliffordgrid import sweep


@dataclass
class Config:
    ranks: list[int] = field(default_factory=lambda: [1, 2, 3])
    sizes: list[int] = field(default_factory=lambda: [2, 4, 6])
    charges: int = 2
    index: int = 5


def run(cfg: Config, out) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["r", "size", "charges", "index", "relations", "states", "failures", "seconds"])
    bad = 0
    for r in cfg.ranks:
        for size in cfg.sizes:
            start = time.perf_counter()
            relations, states, failures = sweep(r, size, cfg.charges, cfg.index)
            writer.writerow([r, size, cfg.charges, cfg.index, relations, states, len(failures),
                             f"{time.perf_counter() - start:.2f}"])
            out.flush()
            bad += len(failures)
    return bad


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--ranks", type=int, nargs="+", default=Config().ranks)
    p.add_argument("--sizes", type=int, nargs="+", default=Config().sizes)
    p.add_argument("--charges", type=int, default=Config.charges)
    p.add_argument("--index", type=int, default=Config.index)
    p.add_argument("--out")
    a = p.parse_args()
    cfg = Config(a.ranks, a.sizes, a.charges, a.index)
    if a.out:
        with open(a.out, "w", newline="") as fh:
            return 1 if run(cfg, fh) else 0
    return 1 if run(cfg, sys.stdout) else 0


if __name__ == "__main__":
    sys.exit(main())
