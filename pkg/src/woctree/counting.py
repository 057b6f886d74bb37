"""Closed forms and recurrences for the leaf counts, in exact integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import series

__all__ = [
    "CountTriple", "FormulaMismatch", "fubini", "catalan", "narayana",
    "size2_counts", "e123", "g123", "ell213", "g123_support", "ell213_support",
    "counts_123", "counts_leq_leq", "counts_leq_lt", "counts_kequal",
    "counts_lt_eq", "counts_le_eq", "lt_eq_delta_closed", "le_eq_actives",
]


class FormulaMismatch(ArithmeticError):
    """Two routes to the same quantity disagreed."""


@dataclass(frozen=True)
class CountTriple:
    a: int
    delta: int
    w: int

    def __post_init__(self):
        if self.a < 0 or self.delta < 0 or self.w < self.a:
            raise FormulaMismatch(f"impossible counts {self}")


@lru_cache(maxsize=None)
def fubini(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return sum(comb(n, i) * fubini(n - i) for i in range(1, n + 1))


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("m must be >= 0")
    return comb(2 * m, m) // (m + 1)


def narayana(n: int, v: int) -> int:
    """Dyck paths of semilength ``n`` with ``v`` valleys."""
    if n < 1 or not 0 <= v <= n - 1:
        raise ValueError(f"narayana({n}, {v}) needs n >= 1 and 0 <= v <= n-1")
    return comb(n, v) * comb(n, v + 1) // n


def _check_n(n: int):
    if n < 1:
        raise ValueError("n must be >= 1")


def size2_counts(kind: str, n: int) -> CountTriple:
    _check_n(n)
    if kind == "tie":
        a, w = factorial(n), 2 * factorial(n) - 1
        delta = (n - 1) * factorial(n - 1)
    elif kind == "lt":
        a, w = 2 ** (n - 1), (n - 1) * 2 ** (n - 1) + 1
        delta = (n - 1) * 2 ** (n - 2) if n >= 2 else 0
    elif kind == "le":
        a, w, delta = 1, n * n - n + 1, 2 * (n - 1)
    else:
        raise ValueError(f"unknown size-2 condition {kind!r}")
    return CountTriple(a, delta, w)


# ---------------------------------------------------------------------------
# 123-avoiders and their one-step extensions

@lru_cache(maxsize=8)
def _e_table(order: int):
    return series.gf("E", order)


def _e_series_for(n: int):
    order = 16
    while order < n:
        order *= 2
    return _e_table(order)


def e123(n: int, d: int) -> int:
    """123-avoiding permutations of size ``n`` with ``d`` descents."""
    if n < 1 or not 0 <= d <= n - 1:
        raise ValueError(f"e123({n}, {d}) needs n >= 1 and 0 <= d <= n-1")
    return series.as_count(series.coeff(_e_series_for(n), n, d))


def g123_support(n: int) -> range:
    if n < 3:
        return range(0)
    if n == 3:
        return range(0, 1)
    return range(1, n - 2)


def g123(n: int, d: int) -> int:
    """Permutations with a 123 whose reduction (drop ``n``) avoids 123."""
    if n in (1, 2):
        return 0
    if d not in g123_support(n):
        raise ValueError(f"g123({n}, {d}) is outside its defined range")
    if n == 3:
        return 1
    return (d + 1) * e123(n - 1, d) + (n - d) * e123(n - 1, d - 1) - e123(n, d)


def ell213_support(n: int) -> range:
    if n < 3:
        return range(0)
    return range(1, n - 1)


def ell213(n: int, d: int) -> int:
    """213 analogue of :func:`g123`, built on Narayana numbers."""
    if n in (1, 2):
        return 0
    if d not in ell213_support(n):
        raise ValueError(f"ell213({n}, {d}) is outside its defined range")
    if n == 3:
        return 1
    return (d + 1) * narayana(n - 1, d) + (n - d) * narayana(n - 1, d - 1) - narayana(n, d)


def _agree(label: str, first: int, second: int) -> int:
    if first != second:
        raise FormulaMismatch(f"{label}: {first} != {second}")
    return first


def _triple(n: int, active, delta_at) -> CountTriple:
    b = sum(delta_at(j) for j in range(1, n + 1))
    return CountTriple(active(n), delta_at(n), active(n) + b)


def counts_123(n: int) -> CountTriple:
    """Stopping condition x_i < x_j < x_k."""
    _check_n(n)

    def active(m):
        by_descents = sum(2 ** d * e123(m, d) for d in range(m))
        alternating = sum((-1) ** j * 2 ** (m - j - 1) * comb(m - j, j) * catalan(m - j)
                          for j in range(m // 2 + 1))
        return _agree(f"a_{m} (x<y<z)", by_descents, alternating)

    def delta_at(j):
        return sum(2 ** d * g123(j, d) for d in g123_support(j))

    return _triple(n, active, delta_at)


def counts_leq_leq(n: int) -> CountTriple:
    """Stopping condition x_i <= x_j <= x_k."""
    _check_n(n)

    def active(m):
        by_descents = sum(2 ** (m - 1 - d) * e123(m, d) for d in range(m))
        convolution = sum(comb(m - j, j) * catalan(m - j) for j in range(m + 1))
        return _agree(f"a_{m} (x<=y<=z)", by_descents, convolution)

    def delta_at(j):
        # complement of the 123 case: d descents <-> j-1-d descents
        return sum(2 ** (j - 1 - d) * g123(j, d) for d in g123_support(j))

    return _triple(n, active, delta_at)


def counts_leq_lt(n: int) -> CountTriple:
    """Stopping condition x_i <= x_j < x_k."""
    _check_n(n)

    def active(m):
        return sum(2 ** v * narayana(m, v) for v in range(m))

    def delta_at(j):
        return sum(2 ** d * ell213(j, d) for d in ell213_support(j))

    return _triple(n, active, delta_at)


# ---------------------------------------------------------------------------
# mixed conditions

def _kequal_actives(k: int, n: int) -> list[int]:
    a = [1]
    for m in range(1, n + 1):
        if m < k:
            a.append(fubini(m))
        else:
            a.append(sum(comb(m, i) * a[m - i] for i in range(1, k)))
    return a


def counts_kequal(k: int, n: int) -> CountTriple:
    """Stopping condition x_{i1} = ... = x_{ik}."""
    if k < 2:
        raise ValueError("k must be >= 2")
    _check_n(n)
    a = _kequal_actives(k, n)

    def delta_at(j):
        if j < k:
            return 0
        return comb(j - 1, k - 1) * sum(comb(j - k, i) * a[i] * a[j - k - i]
                                        for i in range(j - k + 1))

    return _triple(n, lambda m: a[m], delta_at)


def lt_eq_delta_closed(n: int) -> int:
    """Explicit solution of the x<y=z recurrence for the newly inactive."""
    _check_n(n)
    if n < 3:
        return 0
    total = sum(Fraction(k - 2, k) for k in range(3, n + 1)) * Fraction(factorial(n), 2)
    if total.denominator != 1:
        raise FormulaMismatch(f"closed form for delta_{n} is not integral: {total}")
    return int(total)


def counts_lt_eq(n: int) -> CountTriple:
    """Stopping condition x_i < x_j = x_k."""
    _check_n(n)
    a = [factorial(m + 1) // 2 for m in range(n + 1)]
    delta = [0] * (n + 1)
    for m in range(3, n + 1):
        delta[m] = m * delta[m - 1] + (m - 2) * a[m - 2]
    for m in range(1, n + 1):
        _agree(f"delta_{m} (x<y=z)", delta[m], lt_eq_delta_closed(m))
    return CountTriple(a[n], delta[n], a[n] + sum(delta[1:]))


def counts_le_eq(n: int) -> CountTriple:
    """Stopping condition x_i <= x_j = x_k."""
    _check_n(n)
    a = [1, 1] + [0] * max(n - 1, 0)
    for m in range(2, n + 1):
        a[m] = m * a[m - 1] + (m - 1) * a[m - 2]
    delta = [0] * (max(n, 3) + 1)
    delta[3] = 2
    for m in range(4, n + 1):
        delta[m] = (m - 1) * delta[m - 1] + (m - 2) * delta[m - 2] + a[m - 1] - a[m - 2]
    return CountTriple(a[n], delta[n], a[n] + sum(delta[1:n + 1]))


def le_eq_actives(n: int) -> list[int]:
    """``a_0..a_n`` for x<=y=z."""
    a = [1, 1]
    for m in range(2, n + 1):
        a.append(m * a[m - 1] + (m - 1) * a[m - 2])
    return a[: n + 1]
