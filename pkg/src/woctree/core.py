"""Weak-ordering chains, stopping patterns and underlined permutations.

A weak-ordering chain on ``x1..xn`` is stored as its ordered partition: a
tuple of blocks, smallest value group first.  ``value(i)`` is the index of
the block holding variable ``i``, so two chains are equal exactly when they
describe the same weak order.

>>> c = parse_chain("x2<x4=x5<x1<x3")
>>> c.blocks
(frozenset({2}), frozenset({4, 5}), frozenset({1}), frozenset({3}))
>>> str(chain_to_underlined(c, DEC))
'2[54]13'
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Relation", "StoppingPattern", "WeakOrderChain", "UnderlinedPermutation",
    "ChainParseError", "DEC", "MIN_FIRST",
    "children", "contains_pattern", "chain_to_underlined", "underlined_to_chain",
    "complement", "reverse", "descents", "contains_perm_pattern",
    "format_chain", "parse_chain", "check_permutation", "iter_ordered_partitions",
]

DEC = "DEC"
MIN_FIRST = "MIN-FIRST"
_CONVENTIONS = (DEC, MIN_FIRST, None)

# a permutation of {1..n} in one-line notation
Permutation = tuple[int, ...]


class Relation(enum.Enum):
    LT = "<"
    LE = "<="
    EQ = "="

    def holds(self, a: int, b: int) -> bool:
        if self is Relation.LT:
            return a < b
        if self is Relation.LE:
            return a <= b
        return a == b

    @classmethod
    def parse(cls, token: str) -> "Relation":
        token = token.strip()
        if token in ("<=", "≤", "=<"):
            return cls.LE
        if token == "<":
            return cls.LT
        if token in ("=", "=="):
            return cls.EQ
        raise ValueError(f"unknown relation {token!r}")


@dataclass(frozen=True)
class StoppingPattern:
    """Relation chain ``x_{i1} r1 x_{i2} r2 ... x_{im}`` over increasing indices."""

    relations: tuple[Relation, ...]

    def __post_init__(self):
        rels = tuple(Relation.parse(r) if isinstance(r, str) else r for r in self.relations)
        if not rels:
            raise ValueError("a stopping pattern needs arity >= 2")
        object.__setattr__(self, "relations", rels)

    @property
    def arity(self) -> int:
        return len(self.relations) + 1

    @classmethod
    def parse(cls, text: str) -> "StoppingPattern":
        """Parse a comma separated relation string such as ``"<=,<"``."""
        parts = [t for t in text.split(",")]
        if not text.strip() or any(not t.strip() for t in parts):
            raise ValueError(f"malformed relation string {text!r}")
        return cls(tuple(Relation.parse(t) for t in parts))

    def __str__(self) -> str:
        return ",".join(r.value for r in self.relations)


@dataclass(frozen=True)
class WeakOrderChain:
    blocks: tuple[frozenset[int], ...]
    _values: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block in weak-ordering chain")
            if seen & b:
                raise ValueError("blocks of a weak-ordering chain must be disjoint")
            seen |= b
        if seen != set(range(1, len(seen) + 1)) or not seen:
            raise ValueError("blocks must cover exactly {1..n} with n >= 1")
        values = [0] * len(seen)
        for k, b in enumerate(blocks):
            for i in b:
                values[i - 1] = k
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_values", tuple(values))

    @property
    def n(self) -> int:
        return len(self._values)

    @property
    def values(self) -> tuple[int, ...]:
        """Block index of each variable, ``values[i-1] == value(i)``."""
        return self._values

    def value(self, i: int) -> int:
        return self._values[i - 1]

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "WeakOrderChain":
        nblocks = max(values) + 1
        blocks: list[set[int]] = [set() for _ in range(nblocks)]
        for i, v in enumerate(values, 1):
            blocks[v].add(i)
        return cls(tuple(frozenset(b) for b in blocks))

    def restrict(self, k: int) -> "WeakOrderChain":
        """The chain induced on ``x1..xk``."""
        blocks = (b & frozenset(range(1, k + 1)) for b in self.blocks)
        return WeakOrderChain(tuple(b for b in blocks if b))

    def children(self) -> list["WeakOrderChain"]:
        return children(self)

    def __str__(self) -> str:
        return format_chain(self)


def children(c: WeakOrderChain) -> list[WeakOrderChain]:
    """Insert ``x_{n+1}`` in every way: gap before block 0, block 0, gap 1, ..."""
    new = frozenset({c.n + 1})
    out = []
    blocks = c.blocks
    for k in range(len(blocks) + 1):
        out.append(WeakOrderChain(blocks[:k] + (new,) + blocks[k:]))
        if k < len(blocks):
            out.append(WeakOrderChain(blocks[:k] + (blocks[k] | new,) + blocks[k + 1:]))
    return out


def contains_pattern(c: WeakOrderChain, p: StoppingPattern) -> bool:
    """Exhaustive search over increasing index tuples of length ``p.arity``."""
    vals = c.values
    rels = p.relations
    for idx in combinations(range(c.n), p.arity):
        if all(r.holds(vals[idx[t]], vals[idx[t + 1]]) for t, r in enumerate(rels)):
            return True
    return False


# ---------------------------------------------------------------------------
# permutations

def check_permutation(entries: Iterable[int]) -> Permutation:
    perm = tuple(entries)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def descents(p: Sequence[int]) -> set[int]:
    """1-based positions ``i`` with ``p(i) > p(i+1)``."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def contains_perm_pattern(p: Sequence[int], pat: Sequence[int]) -> bool:
    k = len(pat)
    order = sorted(range(k), key=lambda t: pat[t])
    for sub in combinations(p, k):
        if all(sub[order[t]] < sub[order[t + 1]] for t in range(k - 1)):
            return True
    return False


@dataclass(frozen=True)
class UnderlinedPermutation:
    """Permutation whose bridged neighbours belong to the same block.

    ``bridges`` holds 1-based positions ``i``: entries ``i`` and ``i+1`` are
    underlined together.  ``convention`` records how a block is laid out
    (``DEC``, ``MIN_FIRST``) or is ``None`` when no layout is promised, as
    happens after taking a complement.
    """

    perm: Permutation
    bridges: frozenset[int] = frozenset()
    convention: str | None = None

    def __post_init__(self):
        perm = check_permutation(self.perm)
        bridges = frozenset(self.bridges)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "bridges", bridges)
        if self.convention not in _CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if any(not 1 <= i < len(perm) for i in bridges):
            raise ValueError("bridge positions must lie in 1..n-1")
        for run in self.runs():
            if len(run) < 2:
                continue
            if self.convention == DEC and list(run) != sorted(run, reverse=True):
                raise ValueError(f"run {run} is not decreasing")
            if self.convention == MIN_FIRST and (
                run[0] != min(run) or list(run[1:]) != sorted(run[1:], reverse=True)
            ):
                raise ValueError(f"run {run} is not min-first then decreasing")

    @property
    def n(self) -> int:
        return len(self.perm)

    def runs(self) -> list[tuple[int, ...]]:
        """Maximal bridged runs, left to right."""
        out: list[tuple[int, ...]] = []
        cur: list[int] = []
        for i, v in enumerate(self.perm, 1):
            cur.append(v)
            if i not in self.bridges:
                out.append(tuple(cur))
                cur = []
        return out

    def __str__(self) -> str:
        sep = "" if self.n < 10 else " "
        parts = []
        for run in self.runs():
            body = sep.join(map(str, run))
            parts.append(f"[{body}]" if len(run) > 1 else body)
        return sep.join(parts)

    @classmethod
    def parse(cls, text: str, convention: str | None = None) -> "UnderlinedPermutation":
        """Inverse of ``str``: ``"2[54]13"`` or ``"2 [5 4] 1 3"``."""
        pattern = r"\[|\]|\d+" if " " in text.strip() else r"\[|\]|\d"
        entries: list[int] = []
        bridges: set[int] = set()
        run_start = None
        for tok in re.findall(pattern, text):
            if tok == "[":
                run_start = len(entries) + 1
            elif tok == "]":
                if run_start is None:
                    raise ValueError(f"unbalanced ']' in {text!r}")
                bridges.update(range(run_start, len(entries)))
                run_start = None
            else:
                entries.append(int(tok))
        return cls(tuple(entries), frozenset(bridges), convention)


def complement(p):
    """``p^c(i) = n+1-p(i)``; on an underlined permutation bridges stay put."""
    if isinstance(p, UnderlinedPermutation):
        return UnderlinedPermutation(complement(p.perm), p.bridges, None)
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reverse(p):
    """``p^r(i) = p(n+1-i)``; bridge ``i`` moves to ``n-i``."""
    if isinstance(p, UnderlinedPermutation):
        n = p.n
        conv = DEC if _all_runs_increasing(p) else None
        return UnderlinedPermutation(tuple(reversed(p.perm)), frozenset(n - i for i in p.bridges), conv)
    return tuple(reversed(p))


def _all_runs_increasing(p: UnderlinedPermutation) -> bool:
    return all(list(r) == sorted(r) for r in p.runs())


def chain_to_underlined(c: WeakOrderChain, convention: str = DEC) -> UnderlinedPermutation:
    entries: list[int] = []
    bridges: set[int] = set()
    for block in c.blocks:
        if convention == DEC:
            run = sorted(block, reverse=True)
        elif convention == MIN_FIRST:
            rest = sorted(block, reverse=True)
            run = [rest.pop()] + rest
        else:
            raise ValueError(f"unknown convention {convention!r}")
        start = len(entries) + 1
        entries.extend(run)
        bridges.update(range(start, start + len(run) - 1))
    return UnderlinedPermutation(tuple(entries), frozenset(bridges), convention)


def underlined_to_chain(u: UnderlinedPermutation) -> WeakOrderChain:
    return WeakOrderChain(tuple(frozenset(run) for run in u.runs()))


# ---------------------------------------------------------------------------
# text forms

class ChainParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(x(\d+))|(<|=)|(\S))")


def format_chain(c: WeakOrderChain) -> str:
    return "<".join("=".join(f"x{i}" for i in sorted(b)) for b in c.blocks)


def parse_chain(text: str) -> WeakOrderChain:
    """Parse ``x3=x1<x2`` or the partition form ``3,1|2`` / ``31|2``."""
    if "|" in text or re.fullmatch(r"\s*\d[\d,\s]*\s*", text):
        return _parse_partition(text)
    blocks: list[set[int]] = [set()]
    pos = 0
    expect_term = True
    seen: set[int] = set()
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(4) is not None:
            raise ChainParseError(f"unexpected character {m.group(4)!r}", start)
        if expect_term:
            if m.group(1) is None:
                raise ChainParseError("expected a variable like 'x1'", start)
            i = int(m.group(2))
            if i in seen or i < 1:
                raise ChainParseError(f"variable x{i} repeated or invalid", start)
            seen.add(i)
            blocks[-1].add(i)
        else:
            if m.group(3) is None:
                raise ChainParseError("expected '<' or '='", start)
            if m.group(3) == "<":
                blocks.append(set())
        expect_term = not expect_term
        pos = m.end()
    if expect_term:
        raise ChainParseError("chain must end with a variable", len(text))
    if seen != set(range(1, len(seen) + 1)):
        raise ChainParseError("variables must be exactly x1..xn", len(text))
    return WeakOrderChain(tuple(frozenset(b) for b in blocks))


def _parse_partition(text: str) -> WeakOrderChain:
    blocks = []
    offset = 0
    for part in text.split("|"):
        body = part.strip()
        if not body:
            raise ChainParseError("empty block", offset)
        if re.search(r"[,\s]", body):
            items = [t for t in re.split(r"[,\s]+", body) if t]
        else:
            items = list(body)
        if not all(t.isdigit() for t in items):
            raise ChainParseError(f"bad block {body!r}", offset)
        blocks.append(frozenset(int(t) for t in items))
        offset += len(part) + 1
    try:
        return WeakOrderChain(tuple(blocks))
    except ValueError as exc:
        raise ChainParseError(str(exc), 0) from None


def iter_ordered_partitions(n: int) -> Iterator[WeakOrderChain]:
    """All ordered set partitions of {1..n}, built block by block.

    Independent of the generating tree; used as a brute-force oracle.
    """
    def rec(remaining: tuple[int, ...]) -> Iterator[list[frozenset[int]]]:
        if not remaining:
            yield []
            return
        first, rest = remaining[0], remaining[1:]
        # choose the block holding the smallest remaining element, then order
        for r in range(len(rest) + 1):
            for others in combinations(rest, r):
                block = frozenset((first,) + others)
                left = tuple(x for x in rest if x not in block)
                for tail in rec(left):
                    for pos in range(len(tail) + 1):
                        yield tail[:pos] + [block] + tail[pos:]

    for blocks in rec(tuple(range(1, n + 1))):
        yield WeakOrderChain(tuple(blocks))
