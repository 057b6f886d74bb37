"""Truncated formal power series over exact rings, and the catalog of
generating functions for the restricted trees.

Coefficients live either in ``Fraction`` (univariate series) or in
:class:`PolyY`, polynomials in ``y`` over the rationals (bivariate series
graded by descents).  Every closed form is expanded by composing ring
arithmetic, ``sqrt`` and division; nothing is evaluated in floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

__all__ = [
    "PolyY", "TruncatedSeries", "SeriesError", "CATALOG", "gf", "coeff",
    "x_series", "y_poly", "e_closed", "g_closed", "g_from_e", "narayana_closed",
    "l_closed", "l_from_n", "catalan_closed", "as_count",
]


class SeriesError(ArithmeticError):
    pass


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class PolyY:
    """Univariate polynomial in ``y`` with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def y(cls) -> "PolyY":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.c

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyY):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == PolyY((other,)).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self) -> str:
        return f"PolyY({[str(v) for v in self.c]})"

    @staticmethod
    def _lift(other) -> "PolyY":
        return other if isinstance(other, PolyY) else PolyY((other,))

    def __add__(self, other):
        if not isinstance(other, (PolyY, int, Fraction)):
            return NotImplemented
        o = self._lift(other).c
        n = max(len(self.c), len(o))
        return PolyY([self[k] + (o[k] if k < len(o) else 0) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyY([-v for v in self.c])

    def __sub__(self, other):
        if not isinstance(other, (PolyY, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (PolyY, int, Fraction)):
            return NotImplemented
        if not isinstance(other, PolyY):
            o = _frac(other)
            return PolyY([v * o for v in self.c])
        if not self.c or not other.c:
            return PolyY()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return PolyY(out)

    __rmul__ = __mul__

    def exact_div(self, other) -> "PolyY":
        """Polynomial long division that must leave no remainder."""
        d = self._lift(other)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        q = [Fraction(0)] * max(len(rem) - d.degree, 0)
        lead = d.c[-1]
        for k in range(len(q) - 1, -1, -1):
            f = rem[k + d.degree] / lead
            q[k] = f
            if f:
                for j, b in enumerate(d.c):
                    rem[k + j] -= f * b
        if any(rem):
            raise SeriesError(f"{self!r} is not divisible by {d!r}")
        return PolyY(q)

    def evaluate(self, y) -> Fraction:
        acc = Fraction(0)
        for v in reversed(self.c):
            acc = acc * y + v
        return acc

    def derivative(self) -> "PolyY":
        return PolyY([k * v for k, v in enumerate(self.c)][1:])


Coeff = Union[Fraction, PolyY]


def y_poly() -> PolyY:
    return PolyY.y()


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, PolyY) else c == 0


def _unit_inverse(c):
    if isinstance(c, PolyY):
        if not c.is_constant() or c.is_zero():
            raise SeriesError(f"leading coefficient {c!r} is not a unit")
        return Fraction(1) / c.c[0]
    if c == 0:
        raise SeriesError("leading coefficient is zero")
    return Fraction(1) / c


class TruncatedSeries:
    """Power series in ``x`` known exactly for exponents ``0..order``."""

    __slots__ = ("coeffs", "order", "bivariate")

    def __init__(self, coeffs: Sequence, order: int | None = None, bivariate: bool | None = None):
        if bivariate is None:
            bivariate = any(isinstance(c, PolyY) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("series order must be non-negative")
        lift = (lambda c: c if isinstance(c, PolyY) else PolyY((c,))) if bivariate else _frac
        cs = [lift(c) for c in list(coeffs)[: order + 1]]
        zero = PolyY() if bivariate else Fraction(0)
        cs.extend([zero] * (order + 1 - len(cs)))
        self.coeffs = cs
        self.order = order
        self.bivariate = bivariate

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, c, order: int, bivariate: bool = False) -> "TruncatedSeries":
        return cls([c], order, bivariate)

    def _like(self, coeffs, order=None) -> "TruncatedSeries":
        return TruncatedSeries(coeffs, self.order if order is None else order, self.bivariate)

    @property
    def zero(self):
        return PolyY() if self.bivariate else Fraction(0)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r}, order={self.order})"

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def agrees_with(self, other: "TruncatedSeries", order: int | None = None) -> bool:
        n = min(self.order, other.order) if order is None else order
        if n > min(self.order, other.order):
            raise SeriesError("comparison order beyond known coefficients")
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return self._like(self.coeffs[: order + 1], order)

    # -- ring arithmetic ---------------------------------------------------
    def _promote(self, other) -> tuple["TruncatedSeries", "TruncatedSeries"]:
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order, self.bivariate or isinstance(other, PolyY))
        if self.bivariate == other.bivariate:
            return self, other
        lift = lambda t: t if t.bivariate else TruncatedSeries(t.coeffs, t.order, True)
        return lift(self), lift(other)

    def __add__(self, other):
        s, o = self._promote(other)
        n = min(s.order, o.order)
        return s._like([s.coeffs[k] + o.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        s, o = self._promote(other)
        return s + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, PolyY) and not self.bivariate:
                return TruncatedSeries(self.coeffs, self.order, True) * other
            return self._like([c * other for c in self.coeffs])
        s, o = self._promote(other)
        n = min(s.order, o.order)
        a, b = s.coeffs, o.coeffs
        out = []
        for k in range(n + 1):
            acc = s.zero
            for i in range(k + 1):
                if not _is_zero(a[i]) and not _is_zero(b[k - i]):
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return s._like(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise SeriesError("negative powers need div()")
        out = TruncatedSeries.constant(1, self.order, self.bivariate)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c) -> "TruncatedSeries":
        return self * c

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``x**k`` (the order is kept)."""
        return self._like([self.zero] * k + self.coeffs[: self.order + 1 - k])

    def div_scalar(self, c) -> "TruncatedSeries":
        """Exact division of every coefficient by a ring element."""
        if isinstance(c, PolyY) or self.bivariate:
            d = c if isinstance(c, PolyY) else PolyY((c,))
            cs = [(co if isinstance(co, PolyY) else PolyY((co,))).exact_div(d) for co in self.coeffs]
            return TruncatedSeries(cs, self.order, True)
        return self._like([co / _frac(c) for co in self.coeffs])

    def div(self, other) -> "TruncatedSeries":
        """Exact quotient; the divisor's lowest term must be a unit.

        Dividing by a series of valuation ``v`` needs the dividend to have
        valuation at least ``v`` and loses ``v`` orders of precision.
        """
        if not isinstance(other, TruncatedSeries):
            return self.div_scalar(other)
        s, t = self._promote(other)
        v = t.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that is zero to its order")
        sv = s.valuation()
        if sv is not None and sv < v:
            raise SeriesError(
                f"dividend has valuation {sv}, below divisor valuation {v}")
        n = min(s.order, t.order) - v
        if n < 0:
            raise SeriesError("no precision left after division")
        num = s.coeffs[v: v + n + 1]
        den = t.coeffs[v: v + n + 1]
        inv = _unit_inverse(den[0])
        q = []
        for k in range(n + 1):
            acc = num[k]
            for i in range(1, k + 1):
                if not _is_zero(den[i]) and not _is_zero(q[k - i]):
                    acc = acc - den[i] * q[k - i]
            q.append(acc * inv)
        return s._like(q, n)

    __truediv__ = div

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1, solved term by term."""
        if self.coeffs[0] != 1:
            raise SeriesError("sqrt needs constant term 1")
        half = Fraction(1, 2)
        t = [self.coeffs[0]]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                if not _is_zero(t[i]) and not _is_zero(t[k - i]):
                    acc = acc - t[i] * t[k - i]
            t.append(acc * half)
        return self._like(t)

    def derivative(self, wrt: str = "x") -> "TruncatedSeries":
        if wrt == "x":
            if self.order == 0:
                raise SeriesError("no precision left for d/dx")
            return self._like([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)
        if wrt == "y":
            if not self.bivariate:
                return self._like([self.zero] * (self.order + 1))
            return self._like([c.derivative() for c in self.coeffs])
        raise ValueError(f"unknown variable {wrt!r}")

    def subs_y(self, value) -> "TruncatedSeries":
        """Evaluate every coefficient at ``y = value`` (exact rationals)."""
        if not self.bivariate:
            return self
        return TruncatedSeries([c.evaluate(_frac(value)) for c in self.coeffs], self.order, False)

    def scale_x(self, c) -> "TruncatedSeries":
        """Substitute ``x -> c*x``."""
        c = _frac(c)
        return self._like([co * (c ** k) for k, co in enumerate(self.coeffs)])

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(x))`` for ``inner`` with zero constant term (Horner)."""
        if not _is_zero(inner.coeffs[0]):
            raise SeriesError("composition needs an inner series without constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = TruncatedSeries.constant(self.coeffs[n], n, self.bivariate or inner.bivariate)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def coeff(self, xpow: int, ypow: int | None = None):
        return coeff(self, xpow, ypow)


def coeff(s: TruncatedSeries, xpow: int, ypow: int | None = None):
    """Coefficient of ``x**xpow`` (and ``y**ypow`` for bivariate series)."""
    if not 0 <= xpow <= s.order:
        raise SeriesError(f"x^{xpow} is outside 0..{s.order}")
    c = s.coeffs[xpow]
    if ypow is None:
        return c
    if not s.bivariate:
        return c if ypow == 0 else Fraction(0)
    if ypow < 0:
        raise SeriesError("negative power of y")
    return c[ypow]


def as_count(c) -> int:
    """Coefficient that must be a non-negative integer."""
    if isinstance(c, PolyY):
        raise SeriesError("expected a scalar coefficient, got a polynomial")
    c = _frac(c)
    if c.denominator != 1 or c < 0:
        raise SeriesError(f"coefficient {c} is not a count")
    return int(c)


def x_series(order: int, bivariate: bool = False) -> TruncatedSeries:
    return TruncatedSeries([0, 1], order, bivariate)


# ---------------------------------------------------------------------------
# closed forms, written once over a generic x-series X and scalar Y

def e_closed(X: TruncatedSeries, Y) -> TruncatedSeries:
    """123-avoiders by length and descents."""
    u = X * Y * (1 + X - X * Y)
    num = 1 - 2 * u - (1 - 4 * u).sqrt()
    return num.div_scalar(Y * Y).div(X).div(2 * (1 + X - X * Y))


def g_closed(X: TruncatedSeries, Y) -> TruncatedSeries:
    u = X * Y * (1 + X - X * Y)
    root = (1 - 4 * u).sqrt()
    num = 1 - 4 * u + 2 * X * X * Y - (1 - 2 * X * Y) * root
    return num.div_scalar(Y * Y).div(X).div(2 * root)


def g_from_e(order: int) -> TruncatedSeries:
    """``x + (x-1)E + x^2 y E_x + (xy - xy^2) E_y``."""
    x = x_series(order + 2, True)
    y = y_poly()
    E = e_closed(x, y)
    x = x.truncate(E.order)
    out = x + (x - 1) * E + x * x * y * E.derivative("x") + (x * y - x * y * y) * E.derivative("y")
    return out


def narayana_closed(X: TruncatedSeries, Y) -> TruncatedSeries:
    root = (1 - 2 * X * (Y + 1) + X * X * (Y - 1) * (Y - 1)).sqrt()
    num = 1 - X * (Y + 1) - root
    return num.div_scalar(Y).div(X).div_scalar(2)


def l_closed(X: TruncatedSeries, Y) -> TruncatedSeries:
    """Both fractions share the denominator ``2xy``; add numerators first."""
    root = (1 - 2 * X * (Y + 1) + X * X * (Y - 1) * (Y - 1)).sqrt()
    first = X * (Y + 1) - 2 * (Y * Y - Y) * X ** 4 - 1
    second = ((1 - X * Y) ** 2 + X * X - 2 * X).div(root)
    return (first + second).div_scalar(Y).div(X).div_scalar(2)


def l_from_n(order: int) -> TruncatedSeries:
    """``x + (1-y)x^3 + (x-1)N + x^2 y N_x + (xy - xy^2) N_y``."""
    x = x_series(order + 2, True)
    y = y_poly()
    N = narayana_closed(x, y)
    x = x.truncate(N.order)
    return (x + (1 - y) * x ** 3 + (x - 1) * N + x * x * y * N.derivative("x")
            + (x * y - x * y * y) * N.derivative("y"))


def catalan_closed(X: TruncatedSeries) -> TruncatedSeries:
    return (1 - (1 - 4 * X).sqrt()).div(2 * X)


# ---------------------------------------------------------------------------
# catalog

def _x(order):
    return x_series(order)


def _bi(order):
    return x_series(order, True), y_poly()


def _e(N):
    return e_closed(*_bi(N + 1))


def _g(N):
    return g_closed(*_bi(N + 1))


def _n(N):
    return narayana_closed(*_bi(N + 1))


def _l(N):
    return l_closed(*_bi(N + 1))


def _c(N):
    return catalan_closed(_x(N + 1))


def _a3(N):
    return e_closed(_x(N + 1), Fraction(2))


def _b3(N):
    x = _x(N + 1)
    return g_closed(x, Fraction(2)).div(1 - x)


def _w3(N):
    x = _x(N + 1)
    root = (1 - 8 * x + 8 * x * x).sqrt()
    return (x + x * root).div(2 * (1 - x) * root)


def _a4(N):
    return e_closed(2 * _x(N + 1), Fraction(1, 2)) * Fraction(1, 2)


def _b4(N):
    x = _x(N + 1)
    return (g_closed(2 * x, Fraction(1, 2)) * Fraction(1, 2)).div(1 - x)


def _w4(N):
    x = _x(N + 1)
    one_minus = 1 - x * x
    root = (1 - 4 * x - 4 * x * x).sqrt()
    return x.div(one_minus) + (1 - 2 * x - 2 * x * x).div(one_minus * root) - 1


def _a5(N):
    return narayana_closed(_x(N + 1), Fraction(2))


def _b5(N):
    x = _x(N + 1)
    return (x ** 3 + l_closed(x, Fraction(2))).div(1 - x)


def _w5(N):
    x = _x(N + 1)
    root = (1 - 6 * x + x * x).sqrt()
    return ((1 - x) ** 2 - (1 - 3 * x) * root).div(4 * (1 - x) * root)


CATALOG: dict[str, Callable[[int], TruncatedSeries]] = {
    "E": _e, "G": _g, "Gderiv": g_from_e, "N": _n, "L": _l, "Lderiv": l_from_n,
    "C": _c,
    "A3": _a3, "B3": _b3, "W3": _w3,
    "A4": _a4, "B4": _b4, "W4": _w4,
    "A5": _a5, "B5": _b5, "W5": _w5,
}

BIVARIATE = frozenset({"E", "G", "Gderiv", "N", "L", "Lderiv"})


@lru_cache(maxsize=64)
def _gf_cached(name: str, N: int) -> TruncatedSeries:
    s = CATALOG[name](N)
    if s.order < N:
        raise SeriesError(f"{name}: expansion lost precision ({s.order} < {N})")
    return s.truncate(N)


def gf(name: str, N: int) -> TruncatedSeries:
    """Expand catalog entry ``name`` up to ``x**N``."""
    if name not in CATALOG:
        raise KeyError(f"unknown generating function {name!r}; known: {', '.join(CATALOG)}")
    if N < 1:
        raise ValueError("order must be >= 1")
    return _gf_cached(name, N)
