"""Cross-checks between independently computed numbers.

Each check returns :class:`CheckReport` objects whose ``expected`` and
``computed`` values come from different code paths (closed forms, the
Caporaso-Harris recursion, the line-conditioned recursion over a table, a
degenerate-curve decomposition).
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .ak_local import tangency_vanishing_order
from .caporaso_harris import CHSolver
from .closed_forms import has_closed_form, nt_closed
from .profiles import SingularityProfile, delta_d
from .tangency_recursion import BaseValueTable, MissingEntry, nt_recursive, starter_table

PASS, FAIL, INFO = "pass", "fail", "info"

# Anchors from the quartic check: 24 cuspidal cubics through 7 points, 2256
# quartics with A1 A2 A3 through 8 points, and the Euler number 6 N_3(A_2)
# of the line-tangent-to-cubic incidence variety.
CUSPIDAL_CUBICS = 24
KAZARYAN_QUARTIC = 2256
EXCESS_EULER_FACTOR = 6


@dataclass
class CheckReport:
    name: str
    inputs: dict
    expected: int
    computed: int
    verdict: str
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def as_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        tag = self.verdict.upper()
        return f"{tag:4} {self.name} {args} expected={self.expected} computed={self.computed}"


def _verdict(ok: bool, informational: bool) -> str:
    if ok:
        return PASS
    return INFO if informational else FAIL


def check_ch_vs_closed(
    delta_max: int,
    extra_degrees: int = 1,
    below: int = 0,
    solver: CHSolver | None = None,
) -> list[CheckReport]:
    """``delta! * CH tangent count == N_d^T(A_1^delta)`` for ``d`` in ``[d_min - below, d_min + extra]``.

    Comparisons below ``d_min`` are reported with verdict ``info`` when they
    disagree, never ``fail``.
    """
    if not 0 <= delta_max <= 8:
        raise ValueError("closed forms for A_1^delta exist only for delta <= 8")
    solver = solver or CHSolver()
    out = []
    for delta in range(delta_max + 1):
        prof = SingularityProfile(((1, delta),))
        dmin = max(prof.d_min, 2)
        for d in range(max(2, dmin - below), dmin + extra_degrees + 1):
            t0 = time.perf_counter()
            expected = nt_closed(d, prof).value
            computed = math.factorial(delta) * solver.tangent(d, delta)
            elapsed = time.perf_counter() - t0
            out.append(CheckReport(
                "ch-vs-closed",
                {"delta": delta, "d": d},
                expected,
                computed,
                _verdict(expected == computed, d < dmin),
                elapsed,
                {"below_d_min": d < dmin},
            ))
    return out


def kazaryan_check(table: BaseValueTable | None = None) -> CheckReport:
    """Quartics with one node, one cusp and one tacnode through 8 points.

    Such a quartic is a cuspidal cubic plus a line tangent to it:
    either the line takes 2 of the points and the cubic (tangent to that
    line) the rest, or the cubic takes 7 points and the line through the
    last point is tangent to it.  The second count ``n`` is an Euler number
    ``6 N_3(A_2)`` minus the lines through the cusp, which contribute with
    the A_2 vanishing multiplicity 3.
    """
    t0 = time.perf_counter()
    if table is None:
        table = starter_table()
    cusp = SingularityProfile.of(2)
    try:
        n3_a2 = table.n(3, cusp)
    except MissingEntry:
        raise MissingEntry("kazaryan check needs N d=3 profile=A2 in the table") from None

    quartic = SingularityProfile.of(1, 2, 3)
    points = delta_d(4) - quartic.codim
    line_points = delta_d(1)
    cubic_tangent_points = SingularityProfile.of(2).w(3)
    assert line_points + cubic_tangent_points == points

    nt3_a2 = nt_closed(3, cusp).value
    multiplicity = tangency_vanishing_order(2, Fraction(1)).total
    euler = EXCESS_EULER_FACTOR * n3_a2
    n = euler - multiplicity * n3_a2

    line_first = math.comb(points, line_points) * nt3_a2
    cubic_first = math.comb(points, points - 1) * n
    total = line_first + cubic_first

    sub = {
        "N3_A2": n3_a2,
        "NT3_A2": nt3_a2,
        "multiplicity": multiplicity,
        "euler": euler,
        "n": n,
        "n_equals_3N": n == 3 * n3_a2,
        "excess": f"{euler} - {multiplicity * n3_a2} = {n}",
        "line_first": line_first,
        "cubic_first": cubic_first,
    }
    ok = (
        total == KAZARYAN_QUARTIC
        and n3_a2 == CUSPIDAL_CUBICS
        and n == 3 * n3_a2
        and euler - multiplicity * n3_a2 == n
    )
    return CheckReport(
        "kazaryan",
        {"d": 4, "profile": str(quartic)},
        KAZARYAN_QUARTIC,
        total,
        PASS if ok else FAIL,
        time.perf_counter() - t0,
        sub,
    )


def check_eq1_table(table: BaseValueTable) -> list[CheckReport]:
    """Recursion over table data vs closed form, for every complete key with a closed form."""
    out = []
    for d, prof in table.keys():
        if prof.is_empty() or not has_closed_form(prof) or not table.has_complete(d, prof):
            continue
        t0 = time.perf_counter()
        rec = nt_recursive(d, prof, table)
        closed = nt_closed(d, prof)
        out.append(CheckReport(
            "eq1-table",
            {"d": d, "profile": str(prof)},
            closed.value,
            rec.value,
            _verdict(rec.value == closed.value, not closed.valid),
            time.perf_counter() - t0,
            {"below_d_min": not closed.valid},
        ))
    return out


def merge_reports(*groups: list[CheckReport]) -> list[CheckReport]:
    """Deterministic order: by name, then inputs."""
    flat = [r for g in groups for r in g]

    def key(r):
        return r.name, tuple((k, (0, v, "") if isinstance(v, int) else (1, 0, str(v))) for k, v in r.inputs.items())

    return sorted(flat, key=key)
