"""Print N_d^T(A_1^delta) from the Caporaso-Harris recursion next to the closed forms.

Unordered counts; entries below the proven degree bound are marked with '*'.

    python3 scripts/low_degree_table.py --d-max 6
"""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

from aktangent.caporaso_harris import CHSolver
from aktangent.closed_forms import nt_closed
from aktangent.profiles import SingularityProfile


@dataclass
class TableConfig:
    d_max: int = 6
    delta_max: int = 8


def run(cfg: TableConfig) -> int:
    solver = CHSolver()
    for d in range(2, cfg.d_max + 1):
        for delta in range(0, min(cfg.delta_max, d * (d - 1) // 2) + 1):
            prof = SingularityProfile(((1, delta),))
            ch = solver.tangent(d, delta)
            closed = nt_closed(d, prof)
            mark = "" if closed.valid else "*"
            print(f"d={d} delta={delta:<2} CH={ch:<14} closed/delta!={closed.value // math.factorial(delta)}{mark}")
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-max", type=int, default=TableConfig.d_max)
    ap.add_argument("--delta-max", type=int, default=TableConfig.delta_max)
    a = ap.parse_args()
    return run(TableConfig(a.d_max, a.delta_max))


if __name__ == "__main__":
    raise SystemExit(main())
