"""Grow the restricted generating tree and count its leaves.

Nodes are handled as value tuples (``vals[i] = block index of x_{i+1}``)
plus a block count.  Inserting a variable never changes the relative order
of the old ones, so a child only needs the index tuples that end at the new
variable; everything before it was already checked on the parent.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import (
    Relation, StoppingPattern, WeakOrderChain, contains_pattern,
    iter_ordered_partitions,
)

__all__ = [
    "LeafTally", "FrontierLimitError", "DEFAULT_FRONTIER_CAP",
    "tally", "tally_subtrees", "enumerate_leaves", "oracle_tally",
    "newly_contains", "ENUMERATION_KINDS",
]

DEFAULT_FRONTIER_CAP = 10**8
ORACLE_MAX_N = 8
ENUMERATION_KINDS = ("active", "inactive_at_n", "inactive")


class FrontierLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class LeafTally:
    """Per-level leaf counts; index ``j-1`` holds level ``j``."""

    n_max: int
    a: tuple[int, ...]
    delta: tuple[int, ...]
    b: tuple[int, ...]
    w: tuple[int, ...]

    @classmethod
    def from_counts(cls, a, delta) -> "LeafTally":
        b, total = [], 0
        for d in delta:
            total += d
            b.append(total)
        return cls(len(a), tuple(a), tuple(delta), tuple(b),
                   tuple(x + y for x, y in zip(a, b)))

    def rows(self) -> Iterator[tuple[int, int, int, int, int]]:
        for j in range(self.n_max):
            yield j + 1, self.a[j], self.delta[j], self.b[j], self.w[j]

    def __add__(self, other: "LeafTally") -> "LeafTally":
        # combine tallies of disjoint subtrees hanging off the same level
        if self.n_max != other.n_max:
            raise ValueError("tallies cover different depths")
        return LeafTally.from_counts(
            [x + y for x, y in zip(self.a, other.a)],
            [x + y for x, y in zip(self.delta, other.delta)],
        )


# ---------------------------------------------------------------------------
# incremental containment

def _prefix_state(vals: tuple[int, ...], rels: tuple[Relation, ...]):
    """Summarise which old variables can close the pattern with a new one.

    Returns ``(lowest, values)`` over the variables where the first ``m-1``
    terms of the pattern can end: enough to decide every relation against
    a freshly inserted variable.
    """
    ok = [True] * len(vals)
    for r in rels[:-1]:
        nxt = [False] * len(vals)
        lo = None
        seen: set[int] = set()
        for i, v in enumerate(vals):
            if lo is not None:
                if r is Relation.LT:
                    nxt[i] = lo < v
                elif r is Relation.LE:
                    nxt[i] = lo <= v
                else:
                    nxt[i] = v in seen
            if ok[i]:
                lo = v if lo is None or v < lo else lo
                seen.add(v)
        ok = nxt
    live = [v for v, flag in zip(vals, ok) if flag]
    return (min(live) if live else None), frozenset(live)


def _child_hits(state, last: Relation, k: int, merge: bool) -> bool:
    """Does inserting at gap/block ``k`` complete the pattern?"""
    lo, live = state
    if lo is None:
        return False
    if last is Relation.EQ:
        return merge and k in live
    if last is Relation.LE and merge:
        return lo <= k
    return lo < k


def _child_vals(vals, k, merge):
    if merge:
        return vals + (k,)
    return tuple(v + 1 if v >= k else v for v in vals) + (k,)


def _expand(vals, nblocks, rels):
    """Yield ``(child_vals, child_nblocks, hits)`` in gap-then-block order."""
    state = _prefix_state(vals, rels)
    last = rels[-1]
    for k in range(nblocks + 1):
        yield k, False, nblocks + 1, _child_hits(state, last, k, False)
        if k < nblocks:
            yield k, True, nblocks, _child_hits(state, last, k, True)


def newly_contains(parent: WeakOrderChain, child: WeakOrderChain, p: StoppingPattern) -> bool:
    """Incremental test: assumes ``parent`` avoids ``p`` and ``child`` extends it."""
    k = child.value(child.n)
    merge = len(child.blocks) == len(parent.blocks)
    return _child_hits(_prefix_state(parent.values, p.relations), p.relations[-1], k, merge)


def _count_levels(frontier, level, n_max, rels, cap):
    """Breadth-first from ``frontier`` (all at ``level``); returns a, delta lists."""
    a = [0] * n_max
    delta = [0] * n_max
    a[level - 1] = len(frontier)
    for j in range(level + 1, n_max + 1):
        last_level = j == n_max
        nxt = []
        active = dead = 0
        for vals, nb in frontier:
            for k, merge, cnb, hit in _expand(vals, nb, rels):
                if hit:
                    dead += 1
                else:
                    active += 1
                    if not last_level:
                        nxt.append((_child_vals(vals, k, merge), cnb))
            if len(nxt) > cap:
                raise FrontierLimitError(
                    f"frontier at level {j} exceeds cap of {cap} chains")
        a[j - 1] = active
        delta[j - 1] = dead
        frontier = nxt
    return a, delta


def _subtree_job(args):
    frontier, level, n_max, rels, cap = args
    return _count_levels(frontier, level, n_max, rels, cap)


def tally(p: StoppingPattern, n_max: int, frontier_cap: int = DEFAULT_FRONTIER_CAP,
          workers: int = 1) -> LeafTally:
    """Leaf counts of the tree restricted by ``p`` for levels ``1..n_max``.

    With ``workers > 1`` the frontier at a middle level is split into chunks
    tallied in separate processes and the per-level counts are summed.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rels = p.relations
    root = [((0,), 1)]
    if workers <= 1 or n_max < 4:
        a, delta = _count_levels(root, 1, n_max, rels, frontier_cap)
        return LeafTally.from_counts(a, delta)

    split = max(2, n_max - 3)
    head_a, head_delta = _count_levels(root, 1, split, rels, frontier_cap)
    frontier = _frontier_at(rels, split, frontier_cap)
    chunks = [frontier[i::workers] for i in range(workers)]
    jobs = [(c, split, n_max, rels, frontier_cap) for c in chunks if c]
    a = list(head_a) + [0] * (n_max - split)
    delta = list(head_delta) + [0] * (n_max - split)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for ca, cd in pool.map(_subtree_job, jobs):
            for j in range(split, n_max):
                a[j] += ca[j]
                delta[j] += cd[j]
    return LeafTally.from_counts(a, delta)


def tally_subtrees(p: StoppingPattern, roots: list[WeakOrderChain], n_max: int,
                   frontier_cap: int = DEFAULT_FRONTIER_CAP) -> LeafTally:
    """Tally only the subtrees below ``roots`` (all active, same level)."""
    level = roots[0].n
    frontier = [(c.values, len(c.blocks)) for c in roots]
    a, delta = _count_levels(frontier, level, n_max, p.relations, frontier_cap)
    return LeafTally.from_counts(a, delta)


def _frontier_at(rels, level, cap):
    """Active nodes at ``level`` as ``(vals, nblocks)`` in tree order."""
    frontier = [((0,), 1)]
    for j in range(2, level + 1):
        nxt = []
        for vals, nb in frontier:
            for k, merge, cnb, hit in _expand(vals, nb, rels):
                if not hit:
                    nxt.append((_child_vals(vals, k, merge), cnb))
            if len(nxt) > cap:
                raise FrontierLimitError(
                    f"frontier at level {j} exceeds cap of {cap} chains")
        frontier = nxt
    return frontier


def enumerate_leaves(p: StoppingPattern, n: int, which: str = "active",
                     frontier_cap: int = DEFAULT_FRONTIER_CAP) -> Iterator[WeakOrderChain]:
    """Stream leaves of the tree cut at level ``n``.

    ``active``: the ``a_n`` chains of level ``n`` avoiding ``p``.
    ``inactive_at_n``: the ``delta_n`` chains that first contain ``p`` at level ``n``.
    ``inactive``: all ``b_n`` inactive leaves of levels ``1..n``, by level.
    """
    if which not in ENUMERATION_KINDS:
        raise ValueError(f"which must be one of {', '.join(ENUMERATION_KINDS)}, not {which!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    rels = p.relations
    frontier = [((0,), 1)]
    if n == 1 and which == "active":
        yield WeakOrderChain.from_values((0,))
    for j in range(2, n + 1):
        last = j == n
        nxt = []
        for vals, nb in frontier:
            for k, merge, cnb, hit in _expand(vals, nb, rels):
                if hit:
                    if which == "inactive" or (last and which == "inactive_at_n"):
                        yield WeakOrderChain.from_values(_child_vals(vals, k, merge))
                elif not last:
                    nxt.append((_child_vals(vals, k, merge), cnb))
                elif which == "active":
                    yield WeakOrderChain.from_values(_child_vals(vals, k, merge))
            if len(nxt) > frontier_cap:
                raise FrontierLimitError(
                    f"frontier at level {j} exceeds cap of {frontier_cap} chains")
        frontier = nxt


def oracle_tally(p: StoppingPattern, n: int) -> LeafTally:
    """Recount every level from the full set of ordered partitions.

    No tree is built: a chain of size ``j`` is active when it avoids ``p``
    and counts towards ``delta_j`` when it contains ``p`` while its
    restriction to ``x1..x(j-1)`` does not.
    """
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle_tally enumerates all chains; n must be in 1..{ORACLE_MAX_N}")
    a, delta = [], []
    for j in range(1, n + 1):
        act = dead = 0
        for c in iter_ordered_partitions(j):
            level = first_containment_level(c, p)
            if level is None:
                act += 1
            elif level == j:
                dead += 1
        a.append(act)
        delta.append(dead)
    return LeafTally.from_counts(a, delta)


def first_containment_level(c: WeakOrderChain, p: StoppingPattern) -> int | None:
    """Smallest ``k`` such that ``c`` restricted to ``x1..xk`` contains ``p``."""
    if not contains_pattern(c, p):
        return None
    vals = c.values
    best = None
    for idx in combinations(range(c.n), p.arity):
        if best is not None and idx[-1] + 1 >= best:
            continue
        if all(r.holds(vals[idx[t]], vals[idx[t + 1]]) for t, r in enumerate(p.relations)):
            best = idx[-1] + 1
    return best
