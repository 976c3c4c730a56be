"""Singularity profiles ``A_1^{d1} A_2^{d2} ... A_k^{dk}``.

Text form: tokens ``A<i>`` or ``A<i>^<m>`` separated by whitespace or commas,
``A`` case-insensitive.  Repeated tokens accumulate (``A1 A1`` == ``A1^2``).
The empty profile is written ``none`` (an empty string also parses to it).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

_TOKEN = re.compile(r"^[aA](\d+)(?:\^(\d+))?$")


class ProfileParseError(ValueError):
    pass


def delta_d(d: int) -> int:
    """Dimension ``d(d+3)/2`` of the projective space of degree-d curves."""
    return d * (d + 3) // 2


@dataclass(frozen=True, order=True)
class SingularityProfile:
    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for i, m in self.counts:
            if i < 1:
                raise ValueError(f"singularity index must be >= 1, got A{i}")
            if m < 0:
                raise ValueError(f"multiplicity must be >= 0, got A{i}^{m}")
            merged[i] = merged.get(i, 0) + m
        canon = tuple(sorted((i, m) for i, m in merged.items() if m > 0))
        object.__setattr__(self, "counts", canon)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "SingularityProfile":
        return cls(tuple(counts.items()))

    @classmethod
    def of(cls, *indices: int) -> "SingularityProfile":
        """``of(1, 1, 4)`` is ``A1^2 A4``."""
        return cls(tuple((i, 1) for i in indices))

    @classmethod
    def parse(cls, text: str) -> "SingularityProfile":
        text = text.strip()
        if text.lower() in ("", "none", "empty"):
            return cls()
        pairs = []
        for tok in re.split(r"[\s,]+", text):
            if not tok:
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise ProfileParseError(f"bad profile token {tok!r} (expected A<i> or A<i>^<m>)")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
        try:
            return cls(tuple(pairs))
        except ValueError as exc:
            raise ProfileParseError(str(exc)) from None

    def __str__(self):
        if not self.counts:
            return "none"
        return ",".join(f"A{i}" if m == 1 else f"A{i}^{m}" for i, m in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def count(self, i: int) -> int:
        return self.as_dict().get(i, 0)

    def is_empty(self) -> bool:
        return not self.counts

    @property
    def k_max(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    @property
    def codim(self) -> int:
        return sum(i * m for i, m in self.counts)

    @property
    def total_points(self) -> int:
        return sum(m for _, m in self.counts)

    @property
    def d_min(self) -> int:
        """Degree bound ``k + 2 d_1 + d_2 + ... + d_k`` above which the recursion is proven."""
        return self.k_max + sum((2 * m if i == 1 else m) for i, m in self.counts)

    def w(self, d: int) -> int:
        """Number of generic point conditions for the tangency count in degree ``d``."""
        return delta_d(d) - (1 + self.codim)

    @property
    def ordering_factor(self) -> int:
        return math.prod(math.factorial(m) for _, m in self.counts)

    def remove_one(self, i: int) -> "SingularityProfile":
        d = self.as_dict()
        if d.get(i, 0) < 1:
            raise ValueError(f"profile {self} has no A{i}")
        d[i] -= 1
        return SingularityProfile.from_counts(d)

    def indices(self) -> Iterable[int]:
        return (i for i, _ in self.counts)
