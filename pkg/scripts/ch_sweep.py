"""Compare the Caporaso-Harris tangency counts with the closed forms for A_1^delta.

    python3 scripts/ch_sweep.py --delta-max 8 --extra 3 --below 2 --cache /tmp/ch.memo
"""
from __future__ import annotations

import argparse
import os
import time
from dataclasses import dataclass

from aktangent.caporaso_harris import CHSolver
from aktangent.consistency import check_ch_vs_closed


@dataclass
class SweepConfig:
    delta_max: int = 8
    extra: int = 1
    below: int = 0
    cache: str | None = None


def run(cfg: SweepConfig) -> int:
    solver = CHSolver()
    if cfg.cache and os.path.exists(cfg.cache):
        solver.load_cache(cfg.cache)
    t0 = time.perf_counter()
    reports = check_ch_vs_closed(cfg.delta_max, cfg.extra, cfg.below, solver)
    for r in reports:
        print(f"{r.line()}  ({r.elapsed:.3f}s)")
    fails = sum(not r.passed for r in reports)
    print(f"{len(reports)} comparisons, {fails} failures, memo size {len(solver.memo)}, "
          f"{time.perf_counter() - t0:.2f}s")
    if cfg.cache:
        solver.save_cache(cfg.cache)
    return 1 if fails else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--delta-max", type=int, default=SweepConfig.delta_max)
    ap.add_argument("--extra", type=int, default=SweepConfig.extra)
    ap.add_argument("--below", type=int, default=SweepConfig.below)
    ap.add_argument("--cache")
    a = ap.parse_args()
    return run(SweepConfig(a.delta_max, a.extra, a.below, a.cache))


if __name__ == "__main__":
    raise SystemExit(main())
