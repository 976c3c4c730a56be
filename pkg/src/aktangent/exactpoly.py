"""Exact polynomial arithmetic over the rationals.

Scalars are plain ``int`` and ``fractions.Fraction``.  Three containers
live here:

* :class:`UniPoly` -- dense ascending coefficient list.  Coefficients may
  themselves be ``UniPoly`` instances, which is how resultants with a free
  parameter (``Res_x(x^2 + t x + 1, 2x + t) = 4 - t^2``) are expressed.
* :class:`BivarPoly` -- sparse ``{(i, j): coeff}`` in variables ``x, y``.
* :class:`TruncSeries` -- univariate power series known up to ``x^order``.

Resultants use the Sylvester matrix with the rows of the first argument on
top, so ``Res(p, q) = lc(p)^deg(q) * prod q(roots of p)``.  Discriminants
use the classical sign, ``(-1)^(n(n-1)/2) Res(p, p') / lc(p)``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _is_zero(c) -> bool:
    return c == 0


class UniPoly:
    """Dense univariate polynomial, ``coeffs[i]`` multiplies ``x^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, UniPoly) else Fraction(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            if isinstance(other, (int, Fraction)):
                other = UniPoly([other])
            else:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = f"({c})" if isinstance(c, UniPoly) or (isinstance(c, Fraction) and c.denominator != 1) else str(c)
            parts.append(cs if i == 0 else f"{cs}*x^{i}")
        return " + ".join(parts)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = UniPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - other.degree, 1)
        lc = other.lc
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = _exact_div(rem[k + other.degree], lc)
            q[k] = c
            if _is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Exact division; raises if there is a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def __call__(self, value):
        acc = Fraction(0) if not isinstance(value, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        return self * (1 / Fraction(self.lc)) if self.coeffs else self


def _exact_div(a, b):
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        if not isinstance(a, UniPoly):
            a = UniPoly([a])
        return a / b
    return Fraction(a) / b


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q (scalar coefficients only)."""
    p, q = p.monic(), q.monic()
    while not q.is_zero():
        p, q = q, (p % q).monic()
    return p


# Mersenne 2^61 - 1, 10^9 + 7, 998244353
_CERT_PRIMES = (2305843009213693951, 1000000007, 998244353)


def _gcd_degree_mod(a: list[int], b: list[int], prime: int) -> int:
    """Degree of gcd(a, b) over GF(prime); inputs are ascending coefficient lists."""

    def norm(v):
        v = [c % prime for c in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = norm(a), norm(b)
    while b:
        inv = pow(b[-1], -1, prime)
        while len(a) >= len(b):
            f = a[-1] * inv % prime
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] = (a[i + shift] - f * c) % prime
            a = norm(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def is_squarefree(p: UniPoly) -> bool:
    """True iff ``gcd(p, p')`` is constant over Q.

    A modular gcd of degree 0 at a prime not dividing the leading
    coefficient certifies squarefreeness; otherwise the exact rational gcd
    decides.
    """
    if p.degree <= 0:
        return True
    den = math.lcm(*(Fraction(c).denominator for c in p.coeffs))
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    deriv = [i * c for i, c in enumerate(ints)][1:]
    for prime in _CERT_PRIMES:
        if ints[-1] % prime and (len(ints) - 1) % prime:
            if _gcd_degree_mod(ints, deriv, prime) == 0:
                return True
    return poly_gcd(p, p.derivative()).degree == 0


def bareiss_det(matrix: Sequence[Sequence]):
    """Fraction-free determinant.  Entries may be rationals or UniPoly."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(p: UniPoly, q: UniPoly) -> list[list]:
    m, n = p.degree, q.degree
    size = m + n
    zero = Fraction(0)
    rows = []
    pc, qc = list(reversed(p.coeffs)), list(reversed(q.coeffs))
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: UniPoly, q: UniPoly):
    """Sylvester resultant of ``p`` and ``q`` in their main variable.

    Coefficients may be scalars or ``UniPoly`` in a parameter; the result is
    then a scalar or a ``UniPoly`` in that parameter.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial is undefined")
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    if p.degree == 0:
        return p.lc ** q.degree
    if q.degree == 0:
        return q.lc ** p.degree
    return bareiss_det(sylvester_matrix(p, q))


def discriminant(p: UniPoly):
    """``(-1)^(n(n-1)/2) * Res(p, p') / lc(p)``; zero iff ``p`` has a repeated root."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    res = resultant(p, p.derivative())
    d = _exact_div(res, p.lc)
    return -d if (n * (n - 1) // 2) % 2 else d


def seq_binomial(a: Sequence[int], b: Sequence[int]) -> int:
    """``prod_k C(a_k, b_k)``, zero when some ``b_k > a_k``."""
    out = 1
    for k in range(max(len(a), len(b))):
        ak = a[k] if k < len(a) else 0
        bk = b[k] if k < len(b) else 0
        if bk > ak:
            return 0
        out *= math.comb(ak, bk)
    return out


class BivarPoly:
    """Sparse polynomial in ``x`` and ``y`` with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def const(cls, c) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BivarPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            mag = abs(c)
            cstr = str(mag)
            if "/" in cstr:
                cstr = f"({cstr})"
            if mono:
                body = mono if mag == 1 else f"{cstr}*{mono}"
            else:
                body = cstr
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def _coerce(self, other) -> "BivarPoly":
        return other if isinstance(other, BivarPoly) else BivarPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return BivarPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            c = Fraction(other)
            return BivarPoly({k: v * c for k, v in self.terms.items()})
        t: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                t[key] = t.get(key, 0) + a * b
        return BivarPoly(t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = BivarPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x, y):
        return sum((c * Fraction(x) ** i * Fraction(y) ** j for (i, j), c in self.terms.items()), Fraction(0))

    def diff(self, i: int = 0, j: int = 0) -> "BivarPoly":
        """``d^(i+j) / dx^i dy^j``."""
        t = {}
        for (a, b), c in self.terms.items():
            if a >= i and b >= j:
                t[(a - i, b - j)] = c * math.perm(a, i) * math.perm(b, j)
        return BivarPoly(t)

    def substitute(self, x_expr: "BivarPoly", y_expr: "BivarPoly") -> "BivarPoly":
        """Compose: replace ``x`` by ``x_expr`` and ``y`` by ``y_expr``."""
        out = BivarPoly()
        xp: dict[int, BivarPoly] = {}
        yp: dict[int, BivarPoly] = {}
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x_expr ** i
            if j not in yp:
                yp[j] = y_expr ** j
            out = out + xp[i] * yp[j] * c
        return out

    def translate(self, x0, y0) -> "BivarPoly":
        """The polynomial ``p(x + x0, y + y0)``."""
        return self.substitute(BivarPoly.x() + Fraction(x0), BivarPoly.y() + Fraction(y0))

    def truncate(self, order: int) -> "BivarPoly":
        return BivarPoly({k: v for k, v in self.terms.items() if k[0] + k[1] <= order})

    def as_univariate(self, var: str = "x") -> UniPoly:
        """View as a polynomial in ``var`` whose coefficients are ``UniPoly`` in the other variable."""
        if var not in ("x", "y"):
            raise ValueError("var must be 'x' or 'y'")
        main = 0 if var == "x" else 1
        deg = max((k[main] for k in self.terms), default=-1)
        rows: list[dict[int, Fraction]] = [dict() for _ in range(deg + 1)]
        for k, c in self.terms.items():
            rows[k[main]][k[1 - main]] = c
        coeffs = []
        for row in rows:
            width = max(row, default=-1) + 1
            coeffs.append(UniPoly([row.get(e, 0) for e in range(width)]))
        return UniPoly(coeffs)


class TruncSeries:
    """Power series ``sum c_i x^i`` known exactly for ``i <= order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int = 0):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, i: int) -> Fraction:
        if i > self.order:
            raise IndexError(f"coefficient x^{i} lies beyond truncation order {self.order}")
        return self.coeffs[i] if i >= 0 else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = Fraction(other)
            return TruncSeries([a * c for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        if not self.coeffs[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / self.coeffs[0]
        for n in range(1, self.order + 1):
            s = sum((self.coeffs[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv[n] = -s * inv[0]
        return TruncSeries(inv, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        c = Fraction(other)
        if c == 0:
            raise ZeroDivisionError("series division by zero")
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncSeries([1], self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result
