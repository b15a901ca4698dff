import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starcsf.partition import (
    Partition,
    from_multiset,
    hook,
    lex_compare,
    multiplicity,
    multiset_difference,
    parse,
    partitions,
    union,
)

parts = st.lists(st.integers(1, 9), max_size=8)


def test_sorted_and_sized():
    p = Partition([1, 4, 2])
    assert tuple(p) == (4, 2, 1)
    assert p.n == 7 and p.length == 3
    assert repr(p) == "(4,2,1)"
    assert p.to_json() == [4, 2, 1]


@pytest.mark.parametrize("bad", [[0], [-1, 2], [1.5], ["a"]])
def test_rejects_bad_parts(bad):
    with pytest.raises((ValueError, TypeError)):
        Partition(bad)


def test_lex_examples():
    # the smaller partition has the smaller first differing part
    assert Partition([2, 2, 2, 1]) < Partition([3, 2, 1, 1])
    assert Partition([4, 2, 1]) < Partition([4, 3])
    assert lex_compare(Partition([5, 1, 1]), Partition([5, 2])) == -1
    assert lex_compare(Partition([7]), Partition([7])) == 0


def test_comparing_different_sizes_raises():
    with pytest.raises(ValueError):
        Partition([3]) < Partition([2, 2])


def test_partition_counts():
    counts = [sum(1 for _ in partitions(n)) for n in range(1, 13)]
    assert counts == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@pytest.mark.parametrize("n", range(1, 13))
def test_partitions_come_in_strict_lex_order(n):
    ps = list(partitions(n))
    assert all(lex_compare(a, b) == -1 for a, b in zip(ps, ps[1:]))
    assert ps[0] == Partition([1] * n) and ps[-1] == Partition([n])


@pytest.mark.parametrize("n", range(1, 9))
def test_total_order(n):
    ps = list(partitions(n))
    for a, b in itertools.product(ps, repeat=2):
        assert (lex_compare(a, b) == 0) == (a == b)
        assert lex_compare(a, b) == -lex_compare(b, a)
    for a, b, c in itertools.product(ps, repeat=3):
        if a <= b and b <= c:
            assert a <= c


def test_multiset_helpers():
    assert multiplicity([4, 1, 1, 1], 1) == 3
    assert Partition([3, 3, 2]).multiplicity(3) == 2
    assert multiset_difference([5, 3, 3, 1], [3, 1]) == Partition([5, 3])
    assert union([2, 1], [3]) == Partition([3, 2, 1])
    assert from_multiset([2, 5, 2]) == Partition([5, 2, 2])
    assert hook(6, 2) == Partition([4, 1, 1])
    with pytest.raises(ValueError):
        multiplicity([1], 0)
    assert multiset_difference([3], [4]) == Partition([3])


@pytest.mark.parametrize("text", ["(4,2,1)", "[4,2,1]", "4,2,1", [4, 2, 1]])
def test_parse_forms(text):
    assert parse(text) == Partition([4, 2, 1])


def test_parse_rejects_increasing():
    with pytest.raises(ValueError):
        parse("(1,2)")


@given(parts, parts)
def test_union_then_difference(a, b):
    u = union(a, b)
    assert u.n == sum(a) + sum(b)
    assert multiset_difference(u, b) == Partition(a)


@given(parts)
def test_parse_repr_round_trip(a):
    p = Partition(a)
    if p:
        assert parse(repr(p)) == p
