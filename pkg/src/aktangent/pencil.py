"""Count tangent members of a pencil of plane curves by an exact discriminant.

Degree-``d`` forms through ``d(d+3)/2 - 1`` random rational points span a
pencil ``f_0 + t f_1``.  Restricting to a line parametrized by ``s`` gives
``g(s; t)`` of degree ``d`` in ``s`` with coefficients affine in ``t``;
the members tangent to the line are the roots of ``D(t) = disc_s g``.
When ``D`` is squarefree of degree ``2(d-1)`` the count is that degree.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exactpoly import UniPoly, discriminant, is_squarefree
from .profiles import delta_d

log = logging.getLogger(__name__)

Point = tuple[int, int, int]
Form = dict[tuple[int, int, int], int]

DEFAULT_HEIGHT = 100
DEFAULT_MAX_DEGREE = 6


class DegenerateConfiguration(RuntimeError):
    """Every attempt hit a degenerate configuration."""


@dataclass(frozen=True)
class PencilInstance:
    d: int
    seed: int
    attempt: int
    points: tuple[Point, ...]
    line: Point
    basis: tuple[Form, Form]
    height: int = DEFAULT_HEIGHT

    def member(self, t) -> Form:
        f0, f1 = self.basis
        t = Fraction(t)
        keys = set(f0) | set(f1)
        return {m: f0.get(m, 0) + t * f1.get(m, 0) for m in keys}


def monomials(d: int) -> list[tuple[int, int, int]]:
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


def eval_form(form: dict, p) -> Fraction:
    x, y, z = p
    return sum((c * x ** a * y ** b * z ** e for (a, b, e), c in form.items()), Fraction(0))


def nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational right kernel (reduced row echelon form)."""
    m = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def _integral(vec: list[Fraction]) -> list[int]:
    den = lcm(*(v.denominator for v in vec))
    return [int(v * den) for v in vec]


def random_point(rng: random.Random, height: int) -> Point:
    """Affine rational point ``(a/b, c/e)`` as an integer projective triple."""
    a, c = rng.randint(-height, height), rng.randint(-height, height)
    b, e = rng.randint(1, height), rng.randint(1, height)
    return (a * e, c * b, b * e)


def _line_points(line: Point) -> tuple[Point, Point]:
    """Two distinct integer points spanning the line ``l . X = 0``."""
    cands = []
    for basis_vec in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        l0, l1, l2 = line
        b0, b1, b2 = basis_vec
        cross = (l1 * b2 - l2 * b1, l2 * b0 - l0 * b2, l0 * b1 - l1 * b0)
        if any(cross):
            cands.append(cross)
    p = cands[0]
    for q in cands[1:]:
        if any(p[i] * q[j] - p[j] * q[i] for i in range(3) for j in range(3)):
            return p, q
    raise ValueError("degenerate line")


def _attempt_rng(seed: int, attempt: int) -> random.Random:
    return random.Random(f"pencil/{seed}/{attempt}")


def _try_build(d: int, points: list[Point], line: Point) -> tuple[Form, Form] | None:
    mons = monomials(d)
    if any(sum(l * c for l, c in zip(line, p)) == 0 for p in points):
        return None
    rows = [[x ** a * y ** b * z ** e for (a, b, e) in mons] for (x, y, z) in points]
    ker = nullspace(rows, len(mons))
    if len(ker) != 2:
        return None
    f0, f1 = (dict((m, c) for m, c in zip(mons, _integral(v)) if c) for v in ker)
    return f0, f1


def build_pencil(
    d: int,
    seed: int,
    *,
    height: int = DEFAULT_HEIGHT,
    max_retries: int = 20,
    start_attempt: int = 0,
    points: list[Point] | None = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> PencilInstance:
    """Deterministic pencil from ``seed``.

    ``points`` overrides the first attempt's sample points (useful to force
    a degenerate configuration); later attempts draw fresh random points.
    """
    if d < 2:
        raise ValueError(f"pencil needs d >= 2, got {d}")
    if d > max_degree:
        raise ValueError(f"d={d} exceeds max_degree={max_degree}; raise it explicitly")
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    n = delta_d(d) - 1
    for attempt in range(start_attempt, start_attempt + max_retries):
        rng = _attempt_rng(seed, attempt)
        if points is not None and attempt == start_attempt:
            if len(points) != n:
                raise ValueError(f"need {n} points for degree {d}, got {len(points)}")
            pts = [tuple(p) for p in points]
        else:
            pts = [random_point(rng, height) for _ in range(n)]
        line = tuple(rng.randint(-height, height) for _ in range(3))
        if not any(line):
            continue
        basis = _try_build(d, pts, line)
        if basis is None:
            log.debug("pencil d=%d seed=%d attempt=%d degenerate; resampling", d, seed, attempt)
            continue
        return PencilInstance(d, seed, attempt, tuple(pts), line, basis, height)
    raise DegenerateConfiguration(
        f"no usable pencil for d={d}, seed={seed} after {max_retries} attempts (check height={height})"
    )


def restriction(p: PencilInstance) -> UniPoly:
    """``g(s; t)`` as a polynomial in ``s`` with ``UniPoly``-in-``t`` coefficients."""
    P, Q = _line_points(p.line)
    lin = [UniPoly([P[i], Q[i]]) for i in range(3)]
    parts = []
    for form in p.basis:
        acc = UniPoly()
        for (a, b, e), c in form.items():
            acc = acc + (lin[0] ** a) * (lin[1] ** b) * (lin[2] ** e) * c
        parts.append(acc)
    g0, g1 = parts
    n = max(g0.degree, g1.degree) + 1
    return UniPoly([UniPoly([g0[j], g1[j]]) for j in range(n)])


def tangent_discriminant(p: PencilInstance) -> UniPoly:
    g = restriction(p)
    if g.degree < 1:
        raise DegenerateConfiguration("pencil restricts to a constant on the line")
    D = discriminant(g)
    return D if isinstance(D, UniPoly) else UniPoly([D])


def _certified(p: PencilInstance) -> UniPoly | None:
    D = tangent_discriminant(p)
    if D.degree != 2 * (p.d - 1) or not is_squarefree(D):
        return None
    return D


def count_tangent_members(p: PencilInstance, max_retries: int = 20) -> int:
    """Number of pencil members tangent to the line, counted via ``deg D``.

    If ``D`` is not squarefree of the expected degree the pencil is rebuilt
    from the same seed with the next attempt index.
    """
    inst = p
    for _ in range(max_retries):
        D = _certified(inst)
        if D is not None:
            return D.degree
        log.debug("pencil d=%d seed=%d attempt=%d: discriminant not certified; resampling",
                  inst.d, inst.seed, inst.attempt)
        inst = build_pencil(
            inst.d, inst.seed, height=inst.height, start_attempt=inst.attempt + 1, max_degree=max(inst.d, 2)
        )
    raise DegenerateConfiguration(f"discriminant never certified for d={p.d}, seed={p.seed}")


def base_points_ok(p: PencilInstance, ts=(0, 1, -1, Fraction(7, 3))) -> bool:
    return all(eval_form(p.member(t), pt) == 0 for t in ts for pt in p.points)


@dataclass(frozen=True)
class PencilTrial:
    d: int
    seed: int
    attempt: int
    count: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.count == self.expected


def run_trials(d: int, trials: int, seed: int, **build_kw) -> list[PencilTrial]:
    """Seeds ``seed, seed+1, ...``; ``build_kw`` goes to :func:`build_pencil`."""
    out = []
    for k in range(trials):
        s = seed + k
        inst = build_pencil(d, s, **build_kw)
        c = count_tangent_members(inst)
        out.append(PencilTrial(d, s, inst.attempt, c, 2 * (d - 1)))
    return out
