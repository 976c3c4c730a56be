"""Tangency counts from plain counts and line-conditioned counts.

    N^T_d(P) = 2(d-1) N_d(P) - sum_i delta_i (i+1) N_d(P; L_{A_i})

``N_d(P; L_{A_i})`` counts the same curves with one of the ``A_i`` points
constrained to a fixed line, through one point fewer.  Both inputs come
from a :class:`BaseValueTable`, usually read from a text file::

    # comment
    N  d=3 profile=A2 value=24
    NL d=3 profile=A2 cond=A2 value=12
"""
from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, TextIO

from .closed_forms import CountValue
from .profiles import ProfileParseError, SingularityProfile


class TableError(ValueError):
    """Malformed table file."""


class MissingEntry(KeyError):
    def __str__(self):
        return str(self.args[0])


@dataclass(frozen=True)
class BaseValueTable:
    plain: dict[tuple[int, SingularityProfile], int] = field(default_factory=dict)
    conditioned: dict[tuple[int, SingularityProfile, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (d, prof, i), v in self.conditioned.items():
            if prof.count(i) < 1:
                raise TableError(f"conditioned entry d={d} profile={prof} cond=A{i} needs A{i} in the profile")
        for v in list(self.plain.values()) + list(self.conditioned.values()):
            if v < 0:
                raise TableError("table values must be non-negative")

    def __len__(self):
        return len(self.plain) + len(self.conditioned)

    def n(self, d: int, profile: SingularityProfile) -> int:
        try:
            return self.plain[(d, profile)]
        except KeyError:
            raise MissingEntry(f"missing table entry: N d={d} profile={profile}") from None

    def n_line(self, d: int, profile: SingularityProfile, i: int) -> int:
        try:
            return self.conditioned[(d, profile, i)]
        except KeyError:
            raise MissingEntry(f"missing table entry: NL d={d} profile={profile} cond=A{i}") from None

    def has_complete(self, d: int, profile: SingularityProfile) -> bool:
        if (d, profile) not in self.plain:
            return False
        return all((d, profile, i) in self.conditioned for i in profile.indices())

    def keys(self) -> list[tuple[int, SingularityProfile]]:
        return sorted(self.plain, key=lambda k: (k[0], k[1].codim, k[1].counts))

    def dumps(self) -> str:
        lines = []
        for d, prof in self.keys():
            lines.append(f"N d={d} profile={prof} value={self.plain[(d, prof)]}")
            for i in prof.indices():
                if (d, prof, i) in self.conditioned:
                    lines.append(f"NL d={d} profile={prof} cond=A{i} value={self.conditioned[(d, prof, i)]}")
        orphans = sorted(
            (k for k in self.conditioned if (k[0], k[1]) not in self.plain),
            key=lambda k: (k[0], k[1].codim, k[1].counts, k[2]),
        )
        for d, prof, i in orphans:
            lines.append(f"NL d={d} profile={prof} cond=A{i} value={self.conditioned[(d, prof, i)]}")
        return "\n".join(lines) + ("\n" if lines else "")


def _parse_fields(tokens: list[str], lineno: int) -> dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise TableError(f"line {lineno}: expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        if k in out:
            raise TableError(f"line {lineno}: repeated field {k!r}")
        out[k] = v
    return out


def _int_field(fields: dict[str, str], name: str, lineno: int) -> int:
    try:
        return int(fields[name])
    except KeyError:
        raise TableError(f"line {lineno}: missing field {name!r}") from None
    except ValueError:
        raise TableError(f"line {lineno}: field {name!r} is not an integer") from None


def parse_table(lines: Iterable[str]) -> BaseValueTable:
    plain: dict = {}
    cond: dict = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as exc:
            raise TableError(f"line {lineno}: {exc}") from None
        tag, fields = tokens[0], _parse_fields(tokens[1:], lineno)
        if tag not in ("N", "NL"):
            raise TableError(f"line {lineno}: unknown record tag {tag!r}")
        allowed = {"d", "profile", "value"} | ({"cond"} if tag == "NL" else set())
        extra = set(fields) - allowed
        if extra:
            raise TableError(f"line {lineno}: unexpected field(s) {sorted(extra)}")
        d = _int_field(fields, "d", lineno)
        value = _int_field(fields, "value", lineno)
        if "profile" not in fields:
            raise TableError(f"line {lineno}: missing field 'profile'")
        try:
            prof = SingularityProfile.parse(fields["profile"])
        except ProfileParseError as exc:
            raise TableError(f"line {lineno}: {exc}") from None
        if d < 1:
            raise TableError(f"line {lineno}: degree must be >= 1")
        if tag == "N":
            key = (d, prof)
            if key in plain:
                raise TableError(f"line {lineno}: duplicate entry N d={d} profile={prof}")
            plain[key] = value
        else:
            c = SingularityProfile.parse(fields.get("cond", ""))
            if len(c.counts) != 1 or c.counts[0][1] != 1:
                raise TableError(f"line {lineno}: cond must be a single A<i>")
            i = c.counts[0][0]
            key3 = (d, prof, i)
            if key3 in cond:
                raise TableError(f"line {lineno}: duplicate entry NL d={d} profile={prof} cond=A{i}")
            cond[key3] = value
    try:
        return BaseValueTable(plain, cond)
    except TableError:
        raise
    except ValueError as exc:
        raise TableError(str(exc)) from None


def load_table(source: str | TextIO) -> BaseValueTable:
    if hasattr(source, "read"):
        return parse_table(source.read().splitlines())
    with open(source, encoding="utf-8") as fh:
        return parse_table(fh.read().splitlines())


def starter_table() -> BaseValueTable:
    text = resources.files("aktangent").joinpath("data/starter_table.txt").read_text(encoding="utf-8")
    return parse_table(text.splitlines())


def boundary_correction(d: int, profile: SingularityProfile, table: BaseValueTable) -> int:
    return sum(m * (i + 1) * table.n_line(d, profile, i) for i, m in profile.counts)


def nt_recursive(d: int, profile: SingularityProfile, table: BaseValueTable) -> CountValue:
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if profile.is_empty():
        # N_d = 1: a single curve through d(d+3)/2 points
        base = table.plain.get((d, profile), 1)
        return CountValue(2 * (d - 1) * base, True)
    n = table.n(d, profile)
    value = 2 * (d - 1) * n - boundary_correction(d, profile, table)
    return CountValue(value, d >= profile.d_min)


def invert_for_conditioned(d: int, profile: SingularityProfile, n: int, nt: int) -> int:
    """Solve the single-term recursion for ``N_d(A_k; L_{A_k})``."""
    if len(profile.counts) != 1 or profile.counts[0][1] != 1:
        raise ValueError(f"inversion needs a single A_k profile, got {profile}")
    k = profile.counts[0][0]
    q, r = divmod(2 * (d - 1) * n - nt, k + 1)
    if r:
        raise ArithmeticError(
            f"inconsistent data at d={d}, {profile}: 2(d-1)N - N^T = {2 * (d - 1) * n - nt} "
            f"is not divisible by {k + 1}"
        )
    if q < 0:
        raise ArithmeticError(f"inconsistent data at d={d}, {profile}: negative line-conditioned count {q}")
    return q
