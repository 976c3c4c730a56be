from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from aktangent.exactpoly import (
    BivarPoly,
    TruncSeries,
    UniPoly,
    bareiss_det,
    discriminant,
    is_squarefree,
    poly_gcd,
    resultant,
    seq_binomial,
)

from .strategies import fractions, nonzero_fractions

X = UniPoly.x()
T = UniPoly.x()


def param(*cs):
    """Coefficients in a parameter ``t``, lowest degree first."""
    return UniPoly(cs)


def poly_in_x(*coeffs):
    return UniPoly([c if isinstance(c, UniPoly) else UniPoly([c]) for c in coeffs])


uni = st.lists(fractions, min_size=1, max_size=6).map(UniPoly)
nonconst = st.lists(fractions, min_size=2, max_size=5).filter(lambda c: c[-1] != 0).map(UniPoly)


def test_linear_resultant_standard_sign():
    for a, b in [(2, 5), (-3, 7), (0, 1)]:
        assert resultant(X - a, X - b) == a - b


def test_resultant_common_root_vanishes():
    assert resultant(X ** 2 - 1, X - 1) == 0


def test_resultant_with_parameter():
    p = poly_in_x(1, param(0, 1), 1)
    q = poly_in_x(param(0, 1), 2)
    assert resultant(p, q) == param(4, 0, -1)


def test_resultant_zero_input_rejected():
    with pytest.raises(ValueError):
        resultant(UniPoly(), X)


def test_discriminant_quadratic():
    for b in range(-3, 4):
        for c in range(-3, 4):
            assert discriminant(UniPoly([c, b, 1])) == b * b - 4 * c


def test_discriminant_double_root():
    assert discriminant((X - 1) ** 2) == 0


def test_discriminant_depressed_cubic():
    for p in range(-3, 4):
        for q in range(-3, 4):
            assert discriminant(UniPoly([q, p, 0, 1])) == -4 * p ** 3 - 27 * q ** 2


def test_discriminant_parametric_cubic():
    cubic = poly_in_x(param(0, 1), param(1), 0, 1)  # x^3 + x + t
    assert discriminant(cubic) == param(-4, 0, -27)


def test_discriminant_rejects_constant():
    with pytest.raises(ValueError):
        discriminant(UniPoly([3]))


def test_seq_binomial():
    assert seq_binomial((2,), (1,)) == 2
    assert seq_binomial((3, 1), (1, 1)) == 3
    assert seq_binomial((1,), (2,)) == 0
    assert seq_binomial((), ()) == 1


def test_bareiss_matches_cofactor_expansion():
    m = [[2, -1, 3], [0, 4, 5], [1, 1, -2]]
    expected = 2 * (4 * -2 - 5 * 1) - (-1) * (0 * -2 - 5 * 1) + 3 * (0 * 1 - 4 * 1)
    assert bareiss_det(m) == expected
    assert bareiss_det([[0, 1], [1, 0]]) == -1


@given(fractions, fractions)
def test_resultant_of_linears_is_root_difference(a, b):
    assert resultant(X - a, X - b) == a - b


@given(nonconst, nonconst)
def test_resultant_antisymmetry(p, q):
    sign = -1 if (p.degree * q.degree) % 2 else 1
    assert resultant(p, q) == sign * resultant(q, p)


@given(nonconst, nonconst, fractions)
def test_shared_factor_kills_resultant(p, q, r):
    assert resultant(p * (X - r), q * (X - r)) == 0


@given(st.lists(fractions, min_size=1, max_size=4, unique=True), nonzero_fractions)
def test_discriminant_vanishes_iff_repeated(roots, lead):
    p = UniPoly([lead])
    for r in roots:
        p = p * (X - r)
    if p.degree >= 1:
        assert discriminant(p) != 0
        assert is_squarefree(p)
    q = p * (X - roots[0])
    assert discriminant(q) == 0
    assert not is_squarefree(q)


@given(uni, nonconst)
def test_divmod_reconstructs(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(uni, uni, uni)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(nonconst, nonconst)
def test_gcd_divides(a, b):
    g = poly_gcd(a * b, a)
    assert (a % g).is_zero()
    assert g.lc == 1


def test_exact_division_raises_on_remainder():
    with pytest.raises(ArithmeticError):
        (X ** 2 + 1) / (X - 1)
    assert (X ** 2 - 1) / (X - 1) == X + 1


def test_bivariate_basics():
    x, y = BivarPoly.x(), BivarPoly.y()
    f = y ** 2 + x ** 3
    assert f(Fraction(1), Fraction(2)) == 5
    assert f.diff(3, 0) == BivarPoly.const(6)
    assert f.total_degree == 3
    assert str(x ** 2 - y) == "x^2 - y"
    g = f.translate(2, 1)
    assert g(Fraction(0), Fraction(0)) == f(Fraction(2), Fraction(1))


@given(fractions, fractions, fractions, fractions)
def test_substitution_is_a_homomorphism(a, b, px, py):
    x, y = BivarPoly.x(), BivarPoly.y()
    f = x ** 2 * y - y ** 3 + x
    g = x * y + 1
    xe, ye = x * a + y, y * b - x
    lhs = (f * g).substitute(xe, ye)
    rhs = f.substitute(xe, ye) * g.substitute(xe, ye)
    assert lhs == rhs
    assert lhs(px, py) == (f * g)(xe(px, py), ye(px, py))


def test_as_univariate_in_y():
    x, y = BivarPoly.x(), BivarPoly.y()
    u = (y ** 2 * x + y - x ** 2).as_univariate("y")
    assert u.degree == 2
    assert u[2] == UniPoly([0, 1])
    assert u[0] == UniPoly([0, 0, -1])


def test_series_inverse_and_order():
    s = TruncSeries([1, 1], 5)
    inv = s.inverse()
    assert inv.coeffs == tuple(Fraction((-1) ** i) for i in range(6))
    assert (s * inv) == TruncSeries([1], 5)
    with pytest.raises(IndexError):
        s[6]
    with pytest.raises(ValueError):
        TruncSeries([1], -1)
    assert TruncSeries([0, 0, 3], 4).valuation() == 2
    assert TruncSeries([], 4).valuation() is None


@given(st.lists(fractions, min_size=1, max_size=5).filter(lambda c: c[0] != 0),
       st.lists(fractions, max_size=5))
def test_series_division_roundtrip(a, b):
    sa, sb = TruncSeries(a, 6), TruncSeries(b, 6)
    assert (sb / sa) * sa == sb


def test_random_pencil_restriction_degree_law():
    # disc_s of a pencil restricted to a line has degree 2(d-1) in t
    import random

    rng = random.Random(5)
    for d in range(2, 6):
        g0 = UniPoly([rng.randint(-9, 9) for _ in range(d)] + [rng.randint(1, 9)])
        g1 = UniPoly([rng.randint(-9, 9) for _ in range(d)] + [rng.randint(1, 9)])
        g = UniPoly([UniPoly([g0[j], g1[j]]) for j in range(d + 1)])
        assert discriminant(g).degree == 2 * (d - 1)
