import pytest
from hypothesis import given, strategies as st

from woctree.core import StoppingPattern, WeakOrderChain, contains_pattern
from woctree.counting import fubini
from woctree.treesim import (
    FrontierLimitError, LeafTally, enumerate_leaves, newly_contains, oracle_tally, tally,
    tally_subtrees,
)

P = StoppingPattern.parse

# frozen from oracle_tally (full enumeration of ordered partitions)
FROZEN = {
    "=": ((1, 2, 6, 24, 120, 720), (0, 1, 4, 18, 96, 600)),
    "<": ((1, 2, 4, 8, 16, 32), (0, 1, 4, 12, 32, 80)),
    "<=": ((1, 1, 1, 1, 1, 1), (0, 2, 4, 6, 8, 10)),
    "<,<": ((1, 3, 12, 56, 284, 1516), (0, 0, 1, 12, 104, 800)),
    "<=,<=": ((1, 3, 9, 31, 113, 431), (0, 0, 4, 24, 128, 640)),
    "<=,<": ((1, 3, 11, 45, 197, 903), (0, 0, 2, 18, 124, 780)),
    "<,=": ((1, 3, 12, 60, 360, 2520), (0, 0, 1, 10, 86, 756)),
}


@pytest.mark.parametrize("text", sorted(FROZEN))
def test_oracle_matches_frozen(text):
    t = oracle_tally(P(text), 6)
    assert (t.a, t.delta) == FROZEN[text]


@pytest.mark.parametrize("text", ["=", "<", "<=", "<,<", "<=,<=", "<=,<", "<,=", "<=,=",
                                  "=,=", "<,<=", "=,<", "<=,<=,<", "=,=,="])
def test_tree_matches_oracle(text):
    assert tally(P(text), 6) == oracle_tally(P(text), 6)


def test_tally_shape_and_identities():
    t = tally(P("<=,<"), 8)
    for n, a, d, b, w in t.rows():
        assert w == a + b and w <= fubini(n)
    assert t.w == (1, 3, 13, 65, 341, 1827, 9913, 54273)


def test_level_one_and_two():
    t = tally(P("="), 2)
    assert t.a == (1, 2) and t.delta == (0, 1) and t.w == (1, 3)


def test_parallel_split_agrees():
    p = P("<,<")
    assert tally(p, 8, workers=2) == tally(p, 8)


def test_subtrees_add_up():
    p = P("<=,<")
    roots = list(enumerate_leaves(p, 3, "active"))
    parts = [tally_subtrees(p, [r], 6) for r in roots]
    whole = tally_subtrees(p, roots, 6)
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    assert total == whole
    ref = tally(p, 6)
    assert whole.a[-1] == ref.a[-1]


def test_frontier_cap():
    with pytest.raises(FrontierLimitError):
        tally(P("="), 8, frontier_cap=100)


def test_enumerate_examples():
    assert [str(c) for c in enumerate_leaves(P("<="), 4)] == ["x4<x3<x2<x1"]
    assert [str(c) for c in enumerate_leaves(P("<,<"), 3, "inactive_at_n")] == ["x1<x2<x3"]
    dead = [str(c) for c in enumerate_leaves(P("="), 3, "inactive_at_n")]
    assert dead == ["x2=x3<x1", "x2<x1=x3", "x1=x3<x2", "x1<x2=x3"]
    assert [str(c) for c in enumerate_leaves(P("="), 3, "inactive")] == ["x1=x2"] + dead


@pytest.mark.parametrize("text", ["=", "<=,<", "<,=", "=,="])
def test_enumeration_sizes(text):
    t = tally(P(text), 6)
    for n in range(1, 7):
        assert sum(1 for _ in enumerate_leaves(P(text), n, "active")) == t.a[n - 1]
        assert sum(1 for _ in enumerate_leaves(P(text), n, "inactive_at_n")) == t.delta[n - 1]
        assert sum(1 for _ in enumerate_leaves(P(text), n, "inactive")) == t.b[n - 1]


def test_enumerated_leaves_are_classified_correctly():
    p = P("<=,<")
    for c in enumerate_leaves(p, 5, "active"):
        assert not contains_pattern(c, p)
    for c in enumerate_leaves(p, 5, "inactive_at_n"):
        assert contains_pattern(c, p) and not contains_pattern(c.restrict(4), p)


def test_enumerate_errors():
    with pytest.raises(ValueError):
        list(enumerate_leaves(P("<"), 3, "dead"))
    with pytest.raises(ValueError):
        list(enumerate_leaves(P("<"), 0))
    with pytest.raises(ValueError):
        oracle_tally(P("<"), 9)


def test_leaftally_add_requires_same_depth():
    with pytest.raises(ValueError):
        LeafTally.from_counts([1], [0]) + LeafTally.from_counts([1, 1], [0, 0])


@given(st.lists(st.integers(0, 4), min_size=2, max_size=7),
       st.sampled_from(["<", "<=", "=", "<,<", "<=,<", "<,=", "=,="]))
def test_newly_contains_matches_bruteforce(raw, text):
    used = sorted(set(raw))
    parent = WeakOrderChain.from_values([used.index(v) for v in raw])
    p = P(text)
    if contains_pattern(parent, p):
        return
    for child in parent.children():
        assert newly_contains(parent, child, p) == contains_pattern(child, p)
