#!/usr/bin/env python3
"""Run the growth-trend sweep and write one CSV row per grid radius t.

Example:
    python3 scripts/run_sweep.py --preset pi4 --t-max 3 --out sweep.csv
"""

import argparse
import sys
import time
from dataclasses import dataclass

from angleforge import sweep, sweep_csv
from angleforge.cli import PRESETS, preset_context


@dataclass
class SweepConfig:
    preset: str
    t_max: int
    point_set: str
    fast_limit: int
    out: str | None


def parse_args(argv) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--preset", choices=sorted(PRESETS), default="pi4")
    parser.add_argument("--t-max", type=int, default=3)
    parser.add_argument("--point-set", choices=["grid", "union"], default="grid")
    parser.add_argument("--fast-limit", type=int, default=5000)
    parser.add_argument("--out", help="CSV path (default stdout)")
    args = parser.parse_args(argv)
    if args.t_max < 1:
        parser.error("--t-max must be >= 1")
    return SweepConfig(
        args.preset, args.t_max, args.point_set, args.fast_limit, args.out
    )


def main(argv=None) -> int:
    cfg = parse_args(argv)
    ctx = preset_context(cfg.preset)
    start = time.perf_counter()
    rows = sweep(
        ctx,
        range(1, cfg.t_max + 1),
        point_set=cfg.point_set,
        fast_limit=cfg.fast_limit,
    )
    elapsed = time.perf_counter() - start
    text = sweep_csv(rows)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    done = sum(1 for r in rows if not r.skipped)
    print(
        f"# {done}/{len(rows)} rows in {elapsed:.2f}s "
        f"({cfg.preset}, {cfg.point_set} point sets)",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
