import pytest
from hypothesis import given, strategies as st

from woctree.core import (
    DEC, MIN_FIRST, ChainParseError, Relation, StoppingPattern, UnderlinedPermutation,
    WeakOrderChain, chain_to_underlined, children, complement, contains_pattern,
    contains_perm_pattern, descents, format_chain, iter_ordered_partitions, parse_chain,
    reverse, underlined_to_chain,
)
from woctree.counting import fubini

from oracles import ordered_partitions_bruteforce


def chains(max_n=7):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        vals = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
        used = sorted(set(vals))
        return WeakOrderChain.from_values([used.index(v) for v in vals])
    return build()


def test_relation_parse_and_holds():
    assert Relation.parse("≤") is Relation.LE
    assert Relation.parse("==") is Relation.EQ
    assert Relation.LT.holds(1, 2) and not Relation.LT.holds(2, 2)
    assert Relation.LE.holds(2, 2) and Relation.EQ.holds(3, 3)
    with pytest.raises(ValueError):
        Relation.parse(">")


def test_pattern_parse_roundtrip():
    p = StoppingPattern.parse("<=,<")
    assert p.arity == 3 and str(p) == "<=,<"
    for bad in ("", ",<", "<,,<", ">"):
        with pytest.raises(ValueError):
            StoppingPattern.parse(bad)


def test_chain_validation():
    with pytest.raises(ValueError):
        WeakOrderChain((frozenset({1}), frozenset({3})))
    with pytest.raises(ValueError):
        WeakOrderChain((frozenset({1, 2}), frozenset({2})))
    with pytest.raises(ValueError):
        WeakOrderChain(())


def test_children_of_two_block_chain():
    c = parse_chain("x1<x2")
    assert [str(k) for k in children(c)] == [
        "x3<x1<x2", "x1=x3<x2", "x1<x3<x2", "x1<x2=x3", "x1<x2<x3"]


def test_root_children():
    assert [str(c) for c in parse_chain("x1").children()] == ["x2<x1", "x1=x2", "x1<x2"]


@given(chains())
def test_children_invariants(c):
    kids = children(c)
    assert len(kids) == 2 * len(c.blocks) + 1
    assert len(set(kids)) == len(kids)
    assert all(k.restrict(c.n) == c for k in kids)


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_reaches_every_ordered_partition(n):
    level = [parse_chain("x1")]
    for _ in range(n - 1):
        level = [k for c in level for k in children(c)]
    assert len(level) == len(set(level)) == fubini(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_ordered_partition_oracle(n):
    got = [c.values for c in iter_ordered_partitions(n)]
    assert len(got) == len(set(got)) == fubini(n)
    assert set(got) == ordered_partitions_bruteforce(n)


def test_contains_pattern_examples():
    assert contains_pattern(parse_chain("x1<x2=x3"), StoppingPattern.parse("<,="))
    assert not contains_pattern(parse_chain("x3<x2<x1"), StoppingPattern.parse("<="))
    assert contains_pattern(parse_chain("x1=x2"), StoppingPattern.parse("<="))
    assert not contains_pattern(parse_chain("x2<x1=x3"), StoppingPattern.parse("<,="))


@given(chains(6), st.sampled_from(["<", "<=", "=", "<,<", "<=,<", "=,="]))
def test_containment_is_monotone(c, text):
    p = StoppingPattern.parse(text)
    if contains_pattern(c, p):
        assert all(contains_pattern(k, p) for k in children(c))


@given(chains())
def test_format_parse_roundtrip(c):
    assert parse_chain(format_chain(c)) == c


def test_parse_forms():
    assert parse_chain("x2 < x4 = x5 < x1 < x3") == parse_chain("2|45|1|3")
    assert str(parse_chain("3,1|2")) == "x1=x3<x2"
    with pytest.raises(ChainParseError) as err:
        parse_chain("x1<<x2")
    assert err.value.position >= 0
    with pytest.raises(ValueError):
        parse_chain("x1<x3")


def test_permutation_helpers():
    assert descents((3, 1, 2)) == {1}
    assert contains_perm_pattern((1, 3, 2, 4), (1, 2, 3))
    assert not contains_perm_pattern((3, 2, 1), (1, 2))


def test_underlined_parse_and_str():
    u = UnderlinedPermutation.parse("2[54]13", DEC)
    assert u.perm == (2, 5, 4, 1, 3) and u.bridges == frozenset({2})
    assert str(u) == "2[54]13"
    with pytest.raises(ValueError):
        UnderlinedPermutation.parse("2[45]13", DEC)


def test_chain_underlined_conventions():
    c = parse_chain("x2<x4=x5<x1<x3")
    assert str(chain_to_underlined(c, DEC)) == "2[54]13"
    assert str(chain_to_underlined(c, MIN_FIRST)) == "2[45]13"


@given(chains(), st.sampled_from([DEC, MIN_FIRST]))
def test_underlined_roundtrip(c, conv):
    assert underlined_to_chain(chain_to_underlined(c, conv)) == c


def test_complement_and_reverse():
    u = UnderlinedPermutation.parse("2[54]13", DEC)
    assert complement(u).perm == (4, 1, 2, 5, 3) and complement(u).bridges == u.bridges
    r = reverse(u)
    assert r.perm == (3, 1, 4, 5, 2) and r.bridges == frozenset({3})
    assert complement((1, 2, 3)) == (3, 2, 1)
