"""Local A_k analysis of plane curve germs.

A germ is stored by its partial derivatives ``rho_ij = d^{i+j} rho / dx^i dy^j``
at the base point (not by Taylor coefficients; the two differ by ``i! j!``).

Classification follows the usual ladder: nonzero gradient means smooth,
nondegenerate Hessian means a node, and a rank-one Hessian is sheared so its
kernel is ``d/dx``.  Then ``y`` is eliminated along the implicit branch
``y = B(x)`` solving ``d rho / dy = 0``, and the germ restricted there,
``A_hat_0(x) = sum_j (A_j / j!) x^j``, reveals the type: ``A_k`` when
``A_3 = ... = A_k = 0 != A_{k+1}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exactpoly import BivarPoly, TruncSeries


@dataclass(frozen=True)
class GermData:
    derivatives: Mapping[tuple[int, int], Fraction]
    max_order: int

    def rho(self, i: int, j: int) -> Fraction:
        if i + j > self.max_order:
            raise ValueError(f"rho_{i}{j} lies beyond the germ's order {self.max_order}")
        return self.derivatives.get((i, j), Fraction(0))

    def to_taylor(self) -> BivarPoly:
        return BivarPoly({
            (i, j): c / (math.factorial(i) * math.factorial(j))
            for (i, j), c in self.derivatives.items()
        })

    @classmethod
    def from_taylor(cls, poly: BivarPoly, max_order: int) -> "GermData":
        ders = {}
        for n in range(max_order + 1):
            for i in range(n + 1):
                j = n - i
                ders[(i, j)] = poly.coeff(i, j) * math.factorial(i) * math.factorial(j)
        return cls(ders, max_order)

    def __eq__(self, other):
        if not isinstance(other, GermData):
            return NotImplemented
        keys = set(self.derivatives) | set(other.derivatives)
        return self.max_order == other.max_order and all(
            self.derivatives.get(k, 0) == other.derivatives.get(k, 0) for k in keys
        )

    def hessian_det(self) -> Fraction:
        return self.rho(2, 0) * self.rho(0, 2) - self.rho(1, 1) ** 2


def germ_at(poly: BivarPoly, point=(0, 0), max_order: int = 2) -> GermData:
    if max_order < 2:
        raise ValueError("max_order must be >= 2")
    x0, y0 = (Fraction(c) for c in point)
    local = poly.translate(x0, y0) if (x0 or y0) else poly
    return GermData.from_taylor(local.truncate(max_order), max_order)


def linear_change(germ: GermData, a, b, c, e) -> GermData:
    """Germ of ``rho(a X + b Y, c X + e Y)``; the matrix must be invertible."""
    a, b, c, e = (Fraction(v) for v in (a, b, c, e))
    if a * e - b * c == 0:
        raise ValueError("singular coordinate change")
    X, Y = BivarPoly.x(), BivarPoly.y()
    moved = germ.to_taylor().substitute(X * a + Y * b, X * c + Y * e)
    return GermData.from_taylor(moved, germ.max_order)


def hessian_rank(germ: GermData) -> int:
    if germ.hessian_det() != 0:
        return 2
    if germ.rho(2, 0) or germ.rho(1, 1) or germ.rho(0, 2):
        return 1
    return 0


def kernel_shear(germ: GermData) -> GermData:
    """Re-coordinatize so the Hessian kernel is ``d/dx``: ``rho_20 = rho_11 = 0 != rho_02``.

    Uses ``y -> y + m x`` with ``m = -rho_11 / rho_02``, after swapping the
    variables when ``rho_02 = 0``.
    """
    rank = hessian_rank(germ)
    if rank == 0:
        raise ValueError("Hessian vanishes (corank 2); not an A_k point")
    if rank == 2:
        raise ValueError("Hessian is nondegenerate; no kernel direction to align")
    if germ.rho(0, 2) == 0:
        germ = linear_change(germ, 0, 1, 1, 0)
    m = -germ.rho(1, 1) / germ.rho(0, 2)
    if m == 0:
        return germ
    return linear_change(germ, 1, 0, m, 1)


def _z_series(germ: GermData, i: int, order: int) -> TruncSeries:
    """Taylor coefficient of ``y^i`` as a series in ``x``."""
    fi = math.factorial(i)
    return TruncSeries(
        [germ.rho(m, i) / (math.factorial(m) * fi) if m + i <= germ.max_order else 0 for m in range(order + 1)],
        order,
    )


def _check_prepared(germ: GermData) -> None:
    if germ.rho(0, 2) == 0:
        raise ValueError("rho_02 must be nonzero")
    for ij in ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1)):
        if germ.rho(*ij) != 0:
            raise ValueError(f"germ is not in sheared form: rho_{ij[0]}{ij[1]} = {germ.rho(*ij)}")


def elimination_series(germ: GermData, order: int) -> tuple[TruncSeries, TruncSeries]:
    """Return ``(B, A_hat_0)`` to ``x^order``.

    ``B`` is the branch with ``B(0) = 0`` solving
    ``Z_1 + 2 Z_2 B + 3 Z_3 B^2 + ... = 0`` and
    ``A_hat_0 = Z_0 + Z_1 B + Z_2 B^2 + ...``.
    """
    _check_prepared(germ)
    if order > germ.max_order:
        raise ValueError(f"order {order} exceeds the germ's max_order {germ.max_order}")
    z = [_z_series(germ, i, order) for i in range(order + 1)]
    inv_2z2 = (z[2] * 2).inverse()
    b = TruncSeries([], order)
    for _ in range(order + 1):
        rhs = z[1]
        b_pow = b
        for i in range(3, order + 1):
            b_pow = b_pow * b  # B^(i-1)
            rhs = rhs + z[i] * b_pow * i
        new_b = -(rhs * inv_2z2)
        if new_b == b:
            break
        b = new_b
    a_hat = TruncSeries([], order)
    b_pow = TruncSeries([1], order)
    for i in range(order + 1):
        a_hat = a_hat + z[i] * b_pow
        b_pow = b_pow * b
    return b, a_hat


def ak_invariants(germ: GermData, order: int) -> dict[int, Fraction]:
    """``{j: A_j}`` for ``3 <= j <= order`` from the elimination series."""
    _, a_hat = elimination_series(germ, order)
    return {j: a_hat[j] * math.factorial(j) for j in range(3, order + 1)}


def ak_closed(germ: GermData, j: int) -> Fraction:
    """Explicit formulas for ``A_3``, ``A_4``, ``A_5`` of a sheared germ."""
    r02 = germ.rho(0, 2)
    if r02 == 0:
        raise ValueError("rho_02 must be nonzero")
    r = germ.rho
    if j == 3:
        return r(3, 0)
    if j == 4:
        return r(4, 0) - 3 * r(2, 1) ** 2 / r02
    if j == 5:
        return r(5, 0) - 10 * r(2, 1) * r(3, 1) / r02 + 15 * r(1, 2) * r(2, 1) ** 2 / r02 ** 2
    raise ValueError(f"closed form only for j in (3, 4, 5), got {j}")


@dataclass(frozen=True)
class SingularityType:
    tag: str  # "smooth", "A", "degenerate"
    k: int | None
    witness: object = None
    reason: str = ""

    def __str__(self):
        if self.tag == "smooth":
            return "A0"
        if self.tag == "A":
            return f"A{self.k}"
        return "degenerate"


class NotOnCurve(ValueError):
    pass


def classify_germ(germ: GermData, k_max: int) -> SingularityType:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if germ.rho(0, 0) != 0:
        raise NotOnCurve(f"point is not on the curve (value {germ.rho(0, 0)})")
    grad = (germ.rho(1, 0), germ.rho(0, 1))
    if any(grad):
        return SingularityType("smooth", 0, grad)
    det = germ.hessian_det()
    if det != 0:
        return SingularityType("A", 1, det)
    if hessian_rank(germ) == 0:
        return SingularityType("degenerate", None, None, "Hessian vanishes (corank 2)")
    sheared = kernel_shear(germ)
    order = k_max + 1
    if sheared.max_order < order:
        raise ValueError(f"germ known to order {sheared.max_order}, need {order} to test up to A{k_max}")
    inv = ak_invariants(sheared, order)
    for j in range(3, order + 1):
        if inv[j] != 0:
            return SingularityType("A", j - 1, inv[j])
    return SingularityType("degenerate", None, None, f"A_3..A_{order} all vanish (type beyond A{k_max})")


def classify(poly: BivarPoly, point=(0, 0), k_max: int = 8) -> SingularityType:
    order = max(k_max + 1, 2)
    return classify_germ(germ_at(poly, point, order), k_max)


# -- vanishing order of the tangency section at an A_k point on the line ------


@dataclass(frozen=True)
class _QI:
    """Element ``re + im*i`` of Q(i)."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, o):
        return _QI(self.re + o.re, self.im + o.im)

    def __mul__(self, o):
        if not isinstance(o, _QI):
            o = _QI(Fraction(o))
        return _QI(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __pow__(self, n: int):
        out = _QI(Fraction(1))
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.re or self.im)


_I = _QI(Fraction(0), Fraction(1))


def _order_of(terms: list[tuple[int, _QI]]) -> int | None:
    coeffs: dict[int, _QI] = {}
    for e, c in terms:
        coeffs[e] = coeffs.get(e, _QI(Fraction(0))) + c
    nz = [e for e, c in coeffs.items() if c]
    return min(nz) if nz else None


@dataclass(frozen=True)
class VanishingOrder:
    branch_orders: tuple[int, ...]
    total: int


def tangency_vanishing_order(k: int, M) -> VanishingOrder:
    """Order of ``M f_x + f_y`` along the branches of ``f = y^2 + x^{k+1}``.

    The line through the singular point is ``y + M x + (higher order) = 0``.
    Branches are monomial: ``(t^2, i t^{k+1})`` for even ``k``, and
    ``(t, +-i t^{(k+1)/2})`` for odd ``k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    M = Fraction(M)
    if k % 2 == 0:
        branches = [((_QI(Fraction(1)), 2), (_I, k + 1))]
    else:
        h = (k + 1) // 2
        branches = [((_QI(Fraction(1)), 1), (_I, h)), ((_QI(Fraction(1)), 1), (_I * -1, h))]
    orders = []
    for (cx, ex), (cy, ey) in branches:
        on_curve = _order_of([(2 * ey, cy ** 2), (ex * (k + 1), cx ** (k + 1))])
        if on_curve is not None:
            raise AssertionError("parametrization does not lie on the curve")
        # M f_x + f_y = (k+1) M x^k + 2 y
        o = _order_of([(ex * k, cx ** k * ((k + 1) * M)), (ey, cy * 2)])
        if o is None:
            raise ArithmeticError("tangency section vanishes identically along a branch (non-generic line)")
        orders.append(o)
    return VanishingOrder(tuple(orders), sum(orders))
