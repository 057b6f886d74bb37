"""Dyck paths, colored Dyck paths and their maps to weak-ordering chains.

Paths are words over ``U``/``D``; read as lattice paths, ``U`` is a north
step and ``D`` an east step, so the ``c``-th ``D`` runs along column ``c``.
Colorable sites are named by the 1-based word index of their first step:
``UUDUDD[4]`` marks the ``UDD`` that starts at the fourth letter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    MIN_FIRST, DEC, StoppingPattern, UnderlinedPermutation, WeakOrderChain,
    chain_to_underlined, complement, contains_pattern, contains_perm_pattern,
    reverse, underlined_to_chain,
)

__all__ = [
    "DyckPath", "ColoredDyckPath", "SEC3", "SEC4", "SEC5",
    "iter_dyck_paths", "iter_colored", "sites", "weighted_count",
    "dyck_to_321avoider", "avoider321_to_dyck",
    "prop41_decode", "prop41_encode", "prop51_decode", "prop51_encode",
    "phi", "phi_inverse", "rl_maxima", "same_rl_maxima_213", "same_rl_maxima_123",
    "n_in_forbidden_pattern",
]

SEC3, SEC4, SEC5 = "SEC3", "SEC4", "SEC5"
_VARIANTS = (SEC3, SEC4, SEC5)
MAX_WEIGHTED_N = 14

WEAK_PATTERN = StoppingPattern.parse("<=,<=")
MIXED_PATTERN = StoppingPattern.parse("<=,<")


@dataclass(frozen=True)
class DyckPath:
    word: str

    def __post_init__(self):
        h = 0
        for ch in self.word:
            if ch not in "UD":
                raise ValueError(f"Dyck words use U and D only, got {ch!r}")
            h += 1 if ch == "U" else -1
            if h < 0:
                raise ValueError(f"{self.word} goes below the axis")
        if h != 0:
            raise ValueError(f"{self.word} is not balanced")

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    def column_steps(self) -> list[int]:
        """1-based word index of the ``D`` step of each column."""
        return [i for i, ch in enumerate(self.word, 1) if ch == "D"]

    def __str__(self) -> str:
        return self.word


def _occurrences(word: str, sub: str) -> list[int]:
    return [i + 1 for i in range(len(word) - len(sub) + 1) if word.startswith(sub, i)]


def sites(path: DyckPath, variant: str) -> list[int]:
    """Colorable sites of ``path`` for a variant, as 1-based start indices."""
    w = path.word
    if variant == SEC3:
        return sorted(_occurrences(w, "DU") + _occurrences(w, "DDD"))
    if variant == SEC4:
        return _occurrences(w, "UDD")
    if variant == SEC5:
        return _occurrences(w, "DU")
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class ColoredDyckPath:
    path: DyckPath
    variant: str
    marked: frozenset[int] = frozenset()

    def __post_init__(self):
        if isinstance(self.path, str):
            object.__setattr__(self, "path", DyckPath(self.path))
        if self.variant not in _VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        marked = frozenset(self.marked)
        bad = marked - set(sites(self.path, self.variant))
        if bad:
            raise ValueError(f"{sorted(bad)} are not {self.variant} sites of {self.path}")
        object.__setattr__(self, "marked", marked)

    def __str__(self) -> str:
        return f"{self.path.word}[{','.join(map(str, sorted(self.marked)))}]"

    @classmethod
    def parse(cls, text: str, variant: str) -> "ColoredDyckPath":
        m = re.fullmatch(r"\s*([UD]*)\s*(?:\[([\d,\s]*)\])?\s*", text)
        if m is None:
            raise ValueError(f"cannot parse colored path {text!r}")
        marks = [int(t) for t in re.split(r"[,\s]+", m.group(2) or "") if t]
        return cls(DyckPath(m.group(1)), variant, frozenset(marks))


def iter_dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order (U < D)."""
    def rec(prefix: str, up: int, down: int):
        if up == n and down == n:
            yield prefix
            return
        if up < n:
            yield from rec(prefix + "U", up + 1, down)
        if down < up:
            yield from rec(prefix + "D", up, down + 1)

    for w in rec("", 0, 0):
        yield DyckPath(w)


def iter_colored(n: int, variant: str) -> Iterator[ColoredDyckPath]:
    for p in iter_dyck_paths(n):
        s = sites(p, variant)
        for mask in range(1 << len(s)):
            yield ColoredDyckPath(p, variant, frozenset(s[i] for i in range(len(s)) if mask >> i & 1))


def weighted_count(variant: str, n: int) -> int:
    """Number of colored paths: sum of ``2**#sites`` over Dyck paths."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_WEIGHTED_N:
        raise ValueError(f"weighted_count enumerates paths; n must be <= {MAX_WEIGHTED_N}")
    return sum(2 ** len(sites(p, variant)) for p in iter_dyck_paths(n))


# ---------------------------------------------------------------------------
# Dyck paths <-> 321-avoiders

def dyck_to_321avoider(path: DyckPath) -> tuple[int, ...]:
    """Dot every NE-turn cell, then fill free columns with increasing rows."""
    n = path.semilength
    perm = [0] * n
    h = col = 0
    prev = ""
    for ch in path.word:
        if ch == "U":
            h += 1
        else:
            col += 1
            if prev == "U":
                perm[col - 1] = h
        prev = ch
    free_rows = iter(sorted(set(range(1, n + 1)) - set(perm)))
    return tuple(v if v else next(free_rows) for v in perm)


def avoider321_to_dyck(perm: Sequence[int]) -> DyckPath:
    """Inverse of :func:`dyck_to_321avoider`; NE turns sit on left-to-right maxima."""
    if contains_perm_pattern(perm, (3, 2, 1)):
        raise ValueError(f"{tuple(perm)} contains 321")
    out = []
    top = 0
    for v in perm:
        if v > top:
            out.append("U" * (v - top))
            top = v
        out.append("D")
    return DyckPath("".join(out))


# ---------------------------------------------------------------------------
# UDD-colored paths and x<=y<=z

def prop41_decode(cp: ColoredDyckPath) -> WeakOrderChain:
    if cp.variant != SEC4:
        raise ValueError("prop41_decode needs a UDD-colored path")
    cols = cp.path.column_steps()
    # the UDD at word index s uses the D steps at s+1, s+2
    bridges = {cols.index(s + 1) + 1 for s in cp.marked}
    sigma = UnderlinedPermutation(dyck_to_321avoider(cp.path), frozenset(bridges))
    comp = complement(sigma)
    return underlined_to_chain(UnderlinedPermutation(comp.perm, comp.bridges, MIN_FIRST))


def prop41_encode(c: WeakOrderChain) -> ColoredDyckPath:
    if contains_pattern(c, WEAK_PATTERN):
        raise ValueError(f"{c} contains x<=y<=z; it is not an active chain")
    sigma = complement(chain_to_underlined(c, MIN_FIRST))
    path = avoider321_to_dyck(sigma.perm)
    cols = path.column_steps()
    marked = set()
    for b in sigma.bridges:
        s = cols[b - 1] - 1
        if path.word[s - 1] != "U" or cols[b] != cols[b - 1] + 1:
            raise ValueError(f"bridge {b} of {sigma} does not sit on a UDD")
        marked.add(s)
    return ColoredDyckPath(path, SEC4, frozenset(marked))


# ---------------------------------------------------------------------------
# valley-marked paths and x<=y<z

def prop51_decode(cp: ColoredDyckPath) -> WeakOrderChain:
    if cp.variant != SEC5:
        raise ValueError("prop51_decode needs a valley-marked path")
    cols = cp.path.column_steps()
    bridges = frozenset(cols.index(s) + 1 for s in cp.marked)
    sigma = UnderlinedPermutation(dyck_to_321avoider(cp.path), bridges)
    return underlined_to_chain(reverse(sigma))


def prop51_encode(c: WeakOrderChain) -> ColoredDyckPath:
    if contains_pattern(c, MIXED_PATTERN):
        raise ValueError(f"{c} contains x<=y<z; it is not an active chain")
    sigma = reverse(chain_to_underlined(c, DEC))
    path = avoider321_to_dyck(sigma.perm)
    cols = path.column_steps()
    marked = set()
    for b in sigma.bridges:
        s = cols[b - 1]
        if path.word[s] != "U":
            raise ValueError(f"bridge {b} of {sigma} is not at a valley")
        marked.add(s)
    return ColoredDyckPath(path, SEC5, frozenset(marked))


# ---------------------------------------------------------------------------
# phi: newly inactive chains for x<=y<z -> underlined G(213) permutations

def rl_maxima(perm: Sequence[int]) -> dict[int, int]:
    """0-based position -> value of every right-to-left maximum."""
    out = {}
    top = 0
    for i in range(len(perm) - 1, -1, -1):
        if perm[i] > top:
            top = perm[i]
            out[i] = top
    return out


def same_rl_maxima_213(perm: Sequence[int]) -> tuple[int, ...]:
    """The 213-avoider with the same right-to-left maxima as ``perm``.

    Gaps between maxima are filled from the right; each gap takes the
    largest values still free below its maximum, in increasing order.
    """
    maxima = rl_maxima(perm)
    free = sorted(set(perm) - set(maxima.values()))
    out = list(perm)
    gap: list[int] = []
    bound = None
    for i in range(len(perm) - 1, -1, -1):
        if i in maxima:
            _fill_gap(out, gap, bound, free)
            gap, bound = [], maxima[i]
        else:
            gap.append(i)
    _fill_gap(out, gap, bound, free)
    return tuple(out)


def _fill_gap(out, gap, bound, free):
    if not gap:
        return
    below = [v for v in free if v < bound]
    take = below[-len(gap):]
    if len(take) < len(gap):
        raise ValueError("right-to-left maxima cannot be realised")
    for v in take:
        free.remove(v)
    for pos, v in zip(sorted(gap), take):
        out[pos] = v


def same_rl_maxima_123(perm: Sequence[int]) -> tuple[int, ...]:
    """The 123-avoider with the same right-to-left maxima: the rest decreasing."""
    maxima = rl_maxima(perm)
    rest = iter(sorted(set(perm) - set(maxima.values()), reverse=True))
    return tuple(maxima[i] if i in maxima else next(rest) for i in range(len(perm)))


def _remove_max(u: UnderlinedPermutation):
    """Drop entry ``n``; return (perm, bridges, position, n_was_bridged)."""
    n = u.n
    i = u.perm.index(n) + 1
    if i - 1 in u.bridges:
        raise ValueError(f"{u}: entry {n} is bridged to its left")
    perm = u.perm[: i - 1] + u.perm[i:]
    bridges = frozenset(b if b < i else b - 1 for b in u.bridges if b != i)
    return perm, bridges, i, i in u.bridges


def _insert_max(perm, bridges, i, bridged):
    n = len(perm) + 1
    out = perm[: i - 1] + (n,) + perm[i - 1:]
    moved = {b if b < i else b + 1 for b in bridges}
    if bridged:
        moved.add(i)
    return out, frozenset(moved)


def n_in_forbidden_pattern(u: UnderlinedPermutation) -> bool:
    """Does the largest entry end a 123 or an underlined 21-then-3?"""
    n = u.n
    i = u.perm.index(n)
    left = u.perm[:i]
    if any(left[p] < left[q] for p in range(len(left)) for q in range(p + 1, len(left))):
        return True
    return any(b < i + 1 for b in u.bridges)


def _is_newly_inactive(c: WeakOrderChain) -> bool:
    return contains_pattern(c, MIXED_PATTERN) and not contains_pattern(c.restrict(c.n - 1), MIXED_PATTERN)


def phi(c: WeakOrderChain) -> UnderlinedPermutation:
    """Newly inactive chain for x<=y<z -> 213-extension with underlined descents."""
    if c.n < 3 or not _is_newly_inactive(c):
        raise ValueError(f"{c} does not become inactive at level {c.n} for x<=y<z")
    n = c.n
    sigma = chain_to_underlined(c, DEC)
    perm, bridges = sigma.perm, sigma.bridges
    i = perm.index(n) + 1
    j = perm.index(n - 1) + 1
    if j > i:
        raise ValueError(f"{sigma}: n-1 lies right of n")
    if j == i - 1:
        head = perm[: j - 1]
        if not head or any(b < i for b in bridges) or list(head) != sorted(head, reverse=True):
            raise ValueError(f"{sigma}: prefix before n-1 is not a plain decreasing run")
        perm = (n - 1,) + head + perm[j:]
    reduced, rbridges, i, bridged = _remove_max(UnderlinedPermutation(perm, bridges))
    tau = same_rl_maxima_213(reduced)
    out, obridges = _insert_max(tau, rbridges, i, bridged)
    return UnderlinedPermutation(out, obridges)


def phi_inverse(u: UnderlinedPermutation) -> WeakOrderChain:
    n = u.n
    reduced, rbridges, i, bridged = _remove_max(u)
    sigma = same_rl_maxima_123(reduced)
    perm, bridges = _insert_max(sigma, rbridges, i, bridged)
    head = perm[: i - 1]
    if (perm[0] == n - 1 and i >= 3 and list(head) == sorted(head, reverse=True)
            and not any(b < i - 1 for b in bridges)):
        perm = head[1:] + (n - 1,) + perm[i - 1:]
    return underlined_to_chain(UnderlinedPermutation(perm, bridges, DEC))
