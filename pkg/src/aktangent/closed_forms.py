"""Closed-form tangency counts ``N_d^T`` as exact integer polynomials in ``d``.

All counts use the ordered-singularities convention: each of the ``m``
points of type ``A_i`` carries a label, so an unordered count is obtained
by dividing by ``prod m!`` (see :func:`unordered`).
"""
from __future__ import annotations

from dataclasses import dataclass

from .profiles import SingularityProfile

P = SingularityProfile.of


@dataclass(frozen=True)
class ClosedForm:
    """``scale * prod(factor(d))``; each factor lists coefficients from the top degree down."""

    scale: int
    factors: tuple[tuple[int, ...], ...]

    def expanded(self) -> tuple[int, ...]:
        """Coefficients of the expanded polynomial, top degree first."""
        out = [self.scale]
        for f in self.factors:
            prod = [0] * (len(out) + len(f) - 1)
            for i, a in enumerate(out):
                for j, b in enumerate(f):
                    prod[i + j] += a * b
            out = prod
        return tuple(out)

    @property
    def degree(self) -> int:
        return len(self.expanded()) - 1

    def __call__(self, d: int) -> int:
        acc = 0
        for c in self.expanded():
            acc = acc * d + c
        return acc


def _cf(scale, *factors):
    return ClosedForm(scale, tuple(tuple(f) for f in factors))


_D = (1, 0)

CLOSED_FORMS: dict[SingularityProfile, ClosedForm] = {
    # single A_k
    P(1): _cf(6, _D, (1, -1), (1, -2)),
    P(2): _cf(12, (2, -8, 8, -1)),
    P(3): _cf(4, (25, -146, 228, -84)),
    P(4): _cf(120, (3, -20, 36, -15)),
    P(5): _cf(36, (35, -260, 524, -239)),
    P(6): _cf(7, (632, -5134, 11343, -5538)),
    P(7): _cf(24, (651, -5702, 13602, -7002)),
    P(8): _cf(288, (190, -1778, 4533, -2436)),
    # A_1 A_k
    P(1, 1): _cf(2, (9, -45, 30, 123, -145, 6)),
    P(1, 2): _cf(12, (1, -3), (6, -18, -22, 67, -13)),
    P(1, 3): _cf(12, (25, -171, 187, 774, -1535, 426)),
    P(1, 4): _cf(20, (54, -414, 534, 2238, -5207, 1815)),
    P(1, 5): _cf(18, (210, -1770, 2572, 11299, -29650, 11959)),
    P(1, 6): _cf(21, (632, -5766, 9164, 42837, -123391, 55068)),
    P(1, 7): _cf(8, (5859, -57177, 97677, 485874, -1509623, 725940)),
    # A_1^delta, delta >= 3
    P(1, 1, 1): _cf(6, (9, -63, 36, 549, -857, -1148, 2266, -300)),
    P(1, 1, 1, 1): _cf(18, (9, -81, 36, 1458, -2834, -8500, 22455, 13543, -49222, 10488)),
    P(1, 1, 1, 1, 1): _cf(6, (
        81, -891, 270, 27270, -63450, -303912,
        1014807, 1348725, -6097876, -1168832, 12259248, -3513840,
    )),
    P(*[1] * 6): _cf(1, (
        1458, -18954, 2916, 882090, -2390310, -15901596, 64328418,
        130916898, -732619008, -395637750, 3855455766,
        -418407408, -7418026440, 2643818400,
    )),
    P(*[1] * 7): _cf(1, (
        4374, -65610, 0, 4317138, -13352850, -114293592, 543520530,
        1481762970, -9946281060, -8470208502, 95900422338, 1014814332,
        -467415101124, 168796887984, 880782565392, -374053619520,
    )),
    P(*[1] * 8): _cf(1, (
        13122, -223074, -34992, 19717992, -68543496,
        -719400528, 3933317556, 13400193204, -105120249336,
        -119845037160, 1587321808632, 150918108768, -13835625254910,
        5746599271062, 64281794069664, -38151916883064,
        -120388035085920, 59358641529600,
    )),
}


class NoClosedForm(LookupError):
    """No closed form is tabulated for this profile; use the tangency recursion."""


@dataclass(frozen=True)
class CountValue:
    value: int
    valid: bool = True
    ordered: bool = True

    def __int__(self):
        return self.value

    __index__ = __int__


def nt_base(d: int) -> int:
    """Tangent curves of degree ``d`` through ``d(d+3)/2 - 1`` points: ``2(d-1)``."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return 2 * (d - 1)


def has_closed_form(profile: SingularityProfile) -> bool:
    return profile.is_empty() or profile in CLOSED_FORMS


def closed_form(profile: SingularityProfile) -> ClosedForm:
    try:
        return CLOSED_FORMS[profile]
    except KeyError:
        raise NoClosedForm(f"no closed form for profile {profile}; use the tangency recursion") from None


def nt_closed(d: int, profile: SingularityProfile) -> CountValue:
    """Evaluate the tabulated polynomial at ``d``.

    Below ``d_min`` the number is still returned, flagged ``valid=False``.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if profile.is_empty():
        return CountValue(nt_base(d), True)
    return CountValue(closed_form(profile)(d), d >= profile.d_min)


def evaluate_naive(coeffs: tuple[int, ...], d: int) -> int:
    n = len(coeffs) - 1
    return sum(c * d ** (n - i) for i, c in enumerate(coeffs))


def unordered(value: int, profile: SingularityProfile) -> int:
    f = profile.ordering_factor
    q, r = divmod(value, f)
    if r:
        raise ArithmeticError(f"{value} is not divisible by the ordering factor {f} of {profile}")
    return q


def supported_profiles() -> list[SingularityProfile]:
    return sorted(CLOSED_FORMS, key=lambda p: (p.total_points, p.codim))
