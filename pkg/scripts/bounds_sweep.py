#!/usr/bin/env python3
"""Sweep the truncation-level chain over a parameter grid.

Prints one row per (n, d, eps) showing how the graded level N, the block
count, and the truncation levels respond, for both the constant-coefficient
chain and the moving chain.  Moving levels usually cannot be materialized;
the table shows their digit counts instead.

    python3 scripts/bounds_sweep.py --n 1,2 --d 1,2 --eps 1/4,1/2 --csv out.csv
"""

import argparse
import csv
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction

from nevlab.bounds import compute_truncation_levels


@dataclass(frozen=True)
class SweepConfig:
    ns: tuple[int, ...]
    ds: tuple[int, ...]
    epss: tuple[Fraction, ...]
    extra_targets: int
    csv_path: str | None


def parse_config(argv=None) -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="1,2,3")
    ap.add_argument("--d", default="1,2,3")
    ap.add_argument("--eps", default="1/4,1/2,3/4")
    ap.add_argument("--extra-targets", type=int, default=1,
                    help="q = n + 1 + this")
    ap.add_argument("--csv", dest="csv_path", default=None)
    a = ap.parse_args(argv)
    return SweepConfig(
        ns=tuple(int(x) for x in a.n.split(",")),
        ds=tuple(int(x) for x in a.d.split(",")),
        epss=tuple(Fraction(x) for x in a.eps.split(",")),
        extra_targets=a.extra_targets,
        csv_path=a.csv_path,
    )


def run(cfg: SweepConfig):
    rows = []
    for n in cfg.ns:
        for d in cfg.ds:
            q = n + 1 + cfg.extra_targets
            degrees = (d,) * q
            for eps in cfg.epss:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", RuntimeWarning)
                    fixed = compute_truncation_levels(n, q, eps, degrees,
                                                      fixed=True)
                    moving = compute_truncation_levels(n, q, eps, degrees)
                rows.append({
                    "n": n, "d": d, "q": q, "eps": str(eps),
                    "N": fixed.big_n,
                    "M": fixed.m_count,
                    "margin": str(fixed.margin),
                    "fixed_level": fixed.truncations[0],
                    "moving_level_digits": int(moving.level_log10) + 1,
                })
    return rows


def main(argv=None) -> int:
    cfg = parse_config(argv)
    rows = run(cfg)
    header = list(rows[0])
    widths = {h: max(len(h), max(len(str(r[h])) for r in rows)) for h in header}
    print("  ".join(h.rjust(widths[h]) for h in header))
    for r in rows:
        print("  ".join(str(r[h]).rjust(widths[h]) for h in header))
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=header)
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {cfg.csv_path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
