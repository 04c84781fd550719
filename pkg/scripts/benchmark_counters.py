#!/usr/bin/env python3
"""Time the brute-force and fast counters on square grids of growing size.

Both counters are exact; whenever both run they must agree, and the script
asserts that. Grids above the brute cap report only the fast timing.

Example:
    python3 scripts/benchmark_counters.py --preset pi4 --t-max 6
"""

import argparse
import sys
import time
from dataclasses import dataclass

from angleforge import count_brute, count_fast, gen_grid
from angleforge.cli import PRESETS, preset_context


@dataclass
class BenchConfig:
    preset: str
    t_max: int
    brute_limit: int
    out: str | None


def parse_args(argv) -> BenchConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--preset", choices=sorted(PRESETS), default="pi4")
    parser.add_argument("--t-max", type=int, default=5)
    parser.add_argument("--brute-limit", type=int, default=800,
                        help="skip brute above this many points")
    parser.add_argument("--out", help="CSV path (default stdout)")
    args = parser.parse_args(argv)
    if args.t_max < 1:
        parser.error("--t-max must be >= 1")
    return BenchConfig(args.preset, args.t_max, args.brute_limit, args.out)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    ctx = preset_context(cfg.preset)
    lines = ["t,n,total,brute_s,fast_s,speedup"]
    for t in range(1, cfg.t_max + 1):
        grid = gen_grid(ctx, t)
        n = len(grid)
        start = time.perf_counter()
        fast = count_fast(grid, ctx)
        fast_s = time.perf_counter() - start
        if n <= cfg.brute_limit:
            start = time.perf_counter()
            brute = count_brute(grid, ctx, limit=cfg.brute_limit)
            brute_s = time.perf_counter() - start
            assert brute.total == fast.total, (t, brute.total, fast.total)
            speedup = f"{brute_s / fast_s:.1f}" if fast_s > 0 else "inf"
            lines.append(
                f"{t},{n},{fast.total},{brute_s:.4f},{fast_s:.4f},{speedup}"
            )
        else:
            lines.append(f"{t},{n},{fast.total},NA,{fast_s:.4f},NA")
        print(f"# t={t} n={n} done", file=sys.stderr)
    text = "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
