"""Memoized Caporaso-Harris recursion for relative Severi degrees.

``N^{d,delta}(alpha, beta)`` counts reduced degree-``d`` curves (reducible
allowed, ``L`` not a component) with ``delta`` nodes, having ``alpha_k``
contacts of order ``k`` with a fixed line ``L`` at prescribed points,
``beta_k`` contacts of order ``k`` at unprescribed points, and passing
through

    n = d(d+3)/2 - delta - I(alpha) - I(beta) + |beta|

further generic points.  Recursion (specialize one point onto ``L``)::

    N^{d,delta}(alpha, beta)
        = sum_{k: beta_k > 0} k * N^{d,delta}(alpha + e_k, beta - e_k)
        + sum I^{beta'-beta} C(alpha, alpha') C(beta', beta) N^{d-1,delta'}(alpha', beta')

over ``alpha' <= alpha``, ``beta' >= beta``, ``I(alpha') + I(beta') = d - 1``
and ``delta' = delta + |beta' - beta| - (d - 1) >= 0``.  Node counts are
unordered.
"""
from __future__ import annotations

import itertools
import logging
import math
import os
import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exactpoly import seq_binomial

log = logging.getLogger(__name__)

CACHE_FORMAT = "aktangent-ch-memo v1"

Seq = tuple[int, ...]


def trim(seq: Sequence[int]) -> Seq:
    s = list(seq)
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


def weight(seq: Sequence[int]) -> int:
    """``I(seq) = sum k * seq_k`` with 1-based orders."""
    return sum((k + 1) * m for k, m in enumerate(seq))


def size(seq: Sequence[int]) -> int:
    """``|seq| = sum seq_k``."""
    return sum(seq)


def unit(k: int) -> Seq:
    """``e_k`` (1-based)."""
    return (0,) * (k - 1) + (1,)


def _add(a: Sequence[int], b: Sequence[int], sign: int = 1) -> Seq:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)
    )


@dataclass(frozen=True)
class TangencyPair:
    alpha: Seq = ()
    beta: Seq = ()

    def __post_init__(self):
        a, b = trim(self.alpha), trim(self.beta)
        if any(v < 0 for v in a + b):
            raise ValueError("tangency multiplicities must be non-negative")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def degree(self) -> int:
        return weight(self.alpha) + weight(self.beta)


@dataclass(frozen=True)
class CHKey:
    d: int
    delta: int
    pair: TangencyPair

    @property
    def point_conditions(self) -> int:
        b = self.pair.beta
        return self.d * (self.d + 3) // 2 - self.delta - weight(self.pair.alpha) - weight(b) + size(b)

    def is_consistent(self) -> bool:
        return self.d >= 1 and self.pair.degree == self.d


def _sub_sequences(alpha: Seq) -> Iterator[Seq]:
    for combo in itertools.product(*(range(a + 1) for a in alpha)):
        yield trim(combo)


def _partitions(total: int, max_part: int) -> Iterator[Seq]:
    """Multiplicity vectors gamma with ``I(gamma) == total`` and parts ``<= max_part``."""
    if total == 0:
        yield ()
        return
    max_part = min(max_part, total)
    if max_part == 0:
        return
    for m in range(total // max_part, -1, -1):
        for rest in _partitions(total - m * max_part, max_part - 1):
            vec = list(rest) + [0] * (max_part - len(rest))
            vec[max_part - 1] = m
            yield trim(vec)


def _increments(target: int, excess_max: int) -> Iterator[Seq]:
    """Vectors gamma with ``I(gamma) == target`` and ``I(gamma) - |gamma| <= excess_max``.

    Only these can keep ``delta' >= 0``.  Parts of size ``k >= 2`` cost
    ``k - 1`` excess each; ones fill the remainder.
    """
    for excess in range(0, min(excess_max, target) + 1):
        # parts >= 2 described as partitions of `excess` into (k-1)'s
        for big in _partitions(excess, target):
            heavy_weight = sum((k + 2) * m for k, m in enumerate(big))
            if heavy_weight > target:
                continue
            ones = target - heavy_weight
            vec = [ones] + [0] * len(big)
            for k, m in enumerate(big):
                vec[k + 1] += m
            yield trim(vec)


class CHSolver:
    """Relative Severi degrees with a per-instance memo table.

    Memo inserts are idempotent (a key always maps to the same value), so
    the solver can be shared between threads; the lock only protects the
    dict during bulk load/save.
    """

    def __init__(self, max_degree: int | None = None):
        self.memo: dict[tuple[int, int, Seq, Seq], int] = {}
        self.max_degree = max_degree
        self._lock = threading.Lock()
        self.debug = False

    def severi(self, d: int, delta: int, alpha: Sequence[int] = (), beta: Sequence[int] = ()) -> int:
        pair = TangencyPair(tuple(alpha), tuple(beta))
        key = CHKey(d, delta, pair)
        if not key.is_consistent():
            raise ValueError(f"inconsistent key: I(alpha) + I(beta) = {pair.degree} != d = {d}")
        if self.max_degree is not None and d > self.max_degree:
            raise ValueError(f"degree {d} exceeds configured maximum {self.max_degree}")
        return self._n(d, delta, pair.alpha, pair.beta)

    def _n(self, d: int, delta: int, alpha: Seq, beta: Seq) -> int:
        key = (d, delta, alpha, beta)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        val = self._compute(d, delta, alpha, beta)
        self.memo[key] = val
        return val

    def _compute(self, d: int, delta: int, alpha: Seq, beta: Seq) -> int:
        if delta < 0:
            return 0
        n = d * (d + 3) // 2 - delta - d + size(beta)
        if n < 0:
            return 0
        if d == 1:
            return 1 if delta == 0 else 0
        if n == 0:
            # a reduced curve with at most d(d-1)/2 nodes always has n >= d
            return 0

        total = 0
        for k0, bk in enumerate(beta):
            if bk:
                k = k0 + 1
                total += k * self._n(d, delta, _add(alpha, unit(k)), _add(beta, unit(k), -1))

        target_rest = d - 1 - weight(beta)
        if target_rest >= 0:
            for a2 in _sub_sequences(alpha):
                room = target_rest - weight(a2)
                if room < 0:
                    continue
                # delta' >= 0 needs |gamma| >= d-1-delta, and I(gamma) = room
                excess_max = room - (d - 1 - delta)
                if excess_max < 0:
                    continue
                c_alpha = seq_binomial(alpha, a2)
                for gamma in _increments(room, excess_max):
                    b2 = _add(beta, gamma)
                    delta2 = delta + size(gamma) - (d - 1)
                    if delta2 < 0:
                        continue
                    factor = math.prod((k + 1) ** g for k, g in enumerate(gamma))
                    coeff = factor * c_alpha * seq_binomial(b2, beta)
                    sub = self._n(d - 1, delta2, a2, b2)
                    if self.debug and sub:
                        n2 = (d - 1) * (d + 2) // 2 - delta2 - (d - 1) + size(b2)
                        assert n2 == n - 1, (key_repr(d, delta, alpha, beta), n2, n)
                    total += coeff * sub
        return total

    # -- queries used by the rest of the package ---------------------------------

    def tangent(self, d: int, delta: int) -> int:
        """delta-nodal curves through ``w_d`` points tangent to ``L`` (unordered)."""
        if d < 2:
            raise ValueError(f"tangency count needs d >= 2, got {d}")
        if delta < 0:
            raise ValueError("delta must be >= 0")
        beta = (d - 2, 1)
        return self.severi(d, delta, (), beta)

    def plain(self, d: int, delta: int) -> int:
        """Classical Severi degree: delta-nodal curves through ``d(d+3)/2 - delta`` points."""
        if d < 1:
            raise ValueError(f"degree must be >= 1, got {d}")
        if delta < 0:
            raise ValueError("delta must be >= 0")
        return self.severi(d, delta, (), (d,))

    # -- optional persistence ---------------------------------------------------

    def save_cache(self, path: str | os.PathLike) -> None:
        with self._lock:
            items = sorted(self.memo.items())
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(CACHE_FORMAT + "\n")
            for (d, delta, a, b), v in items:
                fh.write(f"{d} {delta} {' '.join(map(str, a))} | {' '.join(map(str, b))} {v}\n")

    def load_cache(self, path: str | os.PathLike) -> int:
        """Merge a cache file; returns the number of entries loaded (0 if ignored)."""
        try:
            with open(path, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            log.warning("CH memo cache %s unreadable (%s); ignoring", path, exc)
            return 0
        if not lines or lines[0].strip() != CACHE_FORMAT:
            log.warning("CH memo cache %s has wrong header; ignoring", path)
            return 0
        parsed = {}
        try:
            for line in lines[1:]:
                if not line.strip():
                    continue
                left, right = line.split("|")
                lf = [int(t) for t in left.split()]
                rf = [int(t) for t in right.split()]
                d, delta, a = lf[0], lf[1], trim(lf[2:])
                b, v = trim(rf[:-1]), rf[-1]
                if weight(a) + weight(b) != d or v < 0:
                    raise ValueError("inconsistent entry")
                parsed[(d, delta, a, b)] = v
        except (ValueError, IndexError) as exc:
            log.warning("CH memo cache %s is corrupt (%s); ignoring", path, exc)
            return 0
        with self._lock:
            for k, v in parsed.items():
                if self.memo.get(k, v) != v:
                    log.warning("CH memo cache %s disagrees with computed value at %s; ignoring file", path, k)
                    return 0
            self.memo.update(parsed)
        return len(parsed)


def key_repr(d, delta, alpha, beta) -> str:
    return f"N^{{{d},{delta}}}({list(alpha)}, {list(beta)})"


_default = CHSolver()


def ch_severi(key: CHKey, solver: CHSolver | None = None) -> int:
    s = solver or _default
    if not key.is_consistent():
        raise ValueError(f"inconsistent key {key}")
    return s.severi(key.d, key.delta, key.pair.alpha, key.pair.beta)


def ch_tangent(d: int, delta: int, solver: CHSolver | None = None) -> int:
    return (solver or _default).tangent(d, delta)


def ch_plain(d: int, delta: int, solver: CHSolver | None = None) -> int:
    return (solver or _default).plain(d, delta)
