import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from oracles import conj, majorized
from pencilstrat.partitions import (
    Partition,
    conjugate,
    majorizes_with_offset,
    parse_partition,
    partition_sum,
    union,
)


def test_partition_normalizes_zeros_and_rejects_bad_input():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert Partition([]).weight == 0
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_text_form():
    assert str(Partition([3, 2, 2])) == "(3,2,2)"
    assert str(Partition()) == "()"
    assert parse_partition("(3,2,2)") == Partition([3, 2, 2])
    assert parse_partition("()") == Partition()


@pytest.mark.parametrize("p, expected", [((2, 2, 1), (3, 2)), ((), ()), ((5, 1), (2, 1, 1, 1, 1))])
def test_conjugate_examples(p, expected):
    assert conjugate(p) == Partition(expected)


def test_union_examples():
    assert union([(5, 2), (6, 3, 3, 2, 1)]) == Partition([6, 5, 3, 3, 2, 2, 1])
    assert union([(3, 2), (2, 2, 1), (1, 1, 1, 1)]) == Partition([3, 2, 2, 2, 1, 1, 1, 1, 1])
    assert union([(4, 1), ()]) == Partition([4, 1])


def test_sum_examples():
    assert partition_sum([(2,), (1,)]) == Partition([3])
    assert partition_sum([(3, 2), (2, 2, 1)]) == Partition([5, 4, 1])
    assert partition_sum([(4, 1)]) == Partition([4, 1])


@pytest.mark.parametrize(
    "p, q, h, expected",
    [
        ((2, 1), (1, 1, 1), 0, False),
        ((3, 1), (3, 1), 0, True),
        ((1, 1, 1), (2, 1), 0, True),
        ((1,), (), 1, True),
        ((), (), -1, False),
        ((), (5, 5), -1, False),
    ],
)
def test_majorization_examples(p, q, h, expected):
    assert majorizes_with_offset(p, q, h) is expected


@given(partitions)
def test_conjugate_is_involution_preserving_weight(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight
    assert conjugate(p) == Partition(conj(p))


@given(st.lists(partitions, max_size=5))
def test_duality(ps):
    assert conjugate(union(ps)) == partition_sum(conjugate(p) for p in ps)
    assert conjugate(partition_sum(ps)) == union(conjugate(p) for p in ps)


@given(partitions, partitions, partitions)
def test_union_and_sum_commute_and_associate(a, b, c):
    assert union([a, b]) == union([b, a])
    assert partition_sum([a, b]) == partition_sum([b, a])
    assert union([union([a, b]), c]) == union([a, union([b, c])])
    assert partition_sum([partition_sum([a, b]), c]) == partition_sum([a, partition_sum([b, c])])


@given(partitions, partitions, st.integers(-3, 3))
def test_majorization_matches_prefix_oracle(p, q, h):
    assert majorizes_with_offset(p, q, h) == majorized(p, q, h)


@given(partitions, partitions)
def test_mutual_majorization_of_equal_weight_means_equal(p, q):
    if p.weight == q.weight and majorizes_with_offset(p, q, 0) and majorizes_with_offset(q, p, 0):
        assert p == q
