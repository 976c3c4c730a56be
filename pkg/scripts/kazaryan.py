"""Decompose the quartic A1 A2 A3 count through 8 points and print each term.

    python3 scripts/kazaryan.py [--table FILE]
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from aktangent.consistency import kazaryan_check
from aktangent.tangency_recursion import load_table, starter_table


@dataclass
class KazaryanConfig:
    table: str | None = None


def run(cfg: KazaryanConfig) -> int:
    table = load_table(cfg.table) if cfg.table else starter_table()
    r = kazaryan_check(table)
    d = r.details
    print(f"cuspidal cubics through 7 points      N_3(A2)  = {d['N3_A2']}")
    print(f"tangent cuspidal cubics               N_3^T(A2) = {d['NT3_A2']}")
    print(f"line takes 2 points: C(8,2) x {d['NT3_A2']:<8} = {d['line_first']}")
    print(f"Euler number 6 N_3(A2)                       = {d['euler']}")
    print(f"lines through the cusp, multiplicity {d['multiplicity']}    = {d['multiplicity'] * d['N3_A2']}")
    print(f"excess-corrected count n: {d['excess']}")
    print(f"cubic takes 7 points: C(8,7) x {d['n']:<7} = {d['cubic_first']}")
    print(r.line())
    return 0 if r.passed else 1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--table")
    return run(KazaryanConfig(ap.parse_args().table))


if __name__ == "__main__":
    raise SystemExit(main())
