"""Count tangent members of random pencils and tabulate against 2(d-1).

    python3 scripts/pencil_trials.py --degrees 2 3 4 5 6 --trials 5 --seed 1
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from aktangent.pencil import DEFAULT_HEIGHT, run_trials


@dataclass
class PencilConfig:
    degrees: list[int] = field(default_factory=lambda: [2, 3, 4, 5])
    trials: int = 5
    seed: int = 1
    height: int = DEFAULT_HEIGHT


def run(cfg: PencilConfig) -> int:
    fails = 0
    print(f"{'d':>3} {'expected':>8} {'counts':<24} {'resamples':>9} {'time':>7}")
    for d in cfg.degrees:
        t0 = time.perf_counter()
        trials = run_trials(d, cfg.trials, cfg.seed, height=cfg.height, max_degree=max(cfg.degrees))
        counts = " ".join(str(t.count) for t in trials)
        resamples = sum(t.attempt for t in trials)
        fails += sum(not t.passed for t in trials)
        print(f"{d:>3} {2 * (d - 1):>8} {counts:<24} {resamples:>9} {time.perf_counter() - t0:>6.2f}s")
    print("all trials agree" if not fails else f"{fails} trials disagree")
    return 1 if fails else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=PencilConfig().degrees)
    ap.add_argument("--trials", type=int, default=PencilConfig.trials)
    ap.add_argument("--seed", type=int, default=PencilConfig.seed)
    ap.add_argument("--height", type=int, default=PencilConfig.height)
    a = ap.parse_args()
    return run(PencilConfig(a.degrees, a.trials, a.seed, a.height))


if __name__ == "__main__":
    raise SystemExit(main())
