import json
from itertools import permutations
from math import factorial

import pytest

from oracles import brute_partitions, centralizer_order, cycle_type
from toeplitz_minors.exceptions import PreconditionError
from toeplitz_minors.partitions import (
    EMPTY,
    Partition,
    contains,
    multiplicity,
    parse_partition,
    partitions_of,
    partitions_up_to,
    z_value,
)

# p(n) for n = 0..20
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]


def test_construction_normalizes_trailing_zeros():
    assert Partition([2, 1, 0, 0]) == Partition([2, 1])
    assert Partition([0]) == EMPTY
    assert Partition([2, 1]).weight == 3
    assert Partition([2, 1]).length == 2


@pytest.mark.parametrize("bad", [[1, 2], [3, -1], [2, 0, 1]])
def test_construction_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_partitions_of_small():
    assert partitions_of(0) == (EMPTY,)
    assert partitions_of(1) == (Partition([1]),)
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(21))
def test_partition_counts(n):
    assert len(partitions_of(n)) == PARTITION_COUNTS[n]


@pytest.mark.parametrize("n", range(11))
def test_partitions_match_brute_force(n):
    got = [p.parts for p in partitions_of(n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(n)
    # canonical order is reverse-lexicographic
    assert got == sorted(got, reverse=True)


def test_ordering_is_weight_then_reverse_lex():
    ps = partitions_up_to(5)
    assert ps == sorted(ps)
    assert Partition([4]) < Partition([3, 1]) < Partition([1, 1, 1, 1]) < Partition([5])


def test_multiplicity_examples():
    assert multiplicity(Partition([2, 1, 1]), 1) == 2
    assert multiplicity(Partition([2, 1, 1]), 3) == 0
    assert multiplicity(Partition([3, 3, 3]), 3) == 3
    with pytest.raises(PreconditionError):
        multiplicity(Partition([1]), 0)


def test_z_value_examples():
    assert z_value(EMPTY) == 1
    assert z_value(Partition([1, 1, 1])) == 6
    assert z_value(Partition([2, 1])) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_z_value_is_centralizer_order(n):
    seen = {}
    for perm in permutations(range(n)):
        seen.setdefault(cycle_type(perm), perm)
    for lam, perm in seen.items():
        assert z_value(lam) == centralizer_order(perm)


@pytest.mark.parametrize("n", range(11))
def test_class_sizes_sum_to_group_order(n):
    assert sum(factorial(n) // z_value(lam) for lam in partitions_of(n)) == factorial(n)


def test_contains_examples():
    assert contains(EMPTY, Partition([5, 2]))
    assert contains(Partition([2, 1]), Partition([2, 1]))
    assert not contains(Partition([1, 1, 1]), Partition([3]))


def test_contains_is_partial_order():
    ps = partitions_up_to(6)
    for a in ps:
        assert contains(a, a)
        for b in ps:
            if contains(a, b) and contains(b, a):
                assert a == b
            if not contains(a, b):
                continue
            for c in ps:
                if contains(b, c):
                    assert contains(a, c)


def test_json_round_trip():
    for lam in partitions_up_to(5):
        assert Partition.from_json(json.loads(json.dumps(lam.to_json()))) == lam
    assert EMPTY.to_json() == []


@pytest.mark.parametrize(
    "text, parts", [("2,1", (2, 1)), ("", ()), ("0", ()), (" 3 ", (3,)), ("1,1,1", (1, 1, 1))]
)
def test_parse_partition(text, parts):
    assert parse_partition(text).parts == parts


@pytest.mark.parametrize("text", ["1,2", "a", "2,,1", "2,0", "-1"])
def test_parse_partition_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_partition_is_immutable_and_hashable():
    lam = Partition([2, 1])
    with pytest.raises(AttributeError):
        lam.parts = (3,)
    assert {lam: 1}[Partition([2, 1, 0])] == 1
    assert lam.part(1) == 2 and lam.part(3) == 0
