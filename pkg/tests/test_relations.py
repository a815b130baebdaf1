from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from canon import C2, LZ2, RZ2
from semiprob import (
    Partition,
    class_sizes,
    commuting_probability,
    probability_of_partition,
    probability_of_relation,
)
from semiprob.errors import EmptyPartition, InvalidPartition, PairOutOfRange
from semiprob.relations import all_partitions

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def count_pairs(p):
    """Independent route: count related ordered pairs directly."""
    n = p.size
    return Fraction(sum(p.related(a, b) for a in range(n) for b in range(n)), n * n)


def test_normalization():
    p = Partition.from_labels([7, 7, 3, 9, 3])
    assert p.block_of == (0, 0, 1, 2, 1)
    assert Partition.from_blocks([[2], [0, 1]]).block_of == (0, 0, 1)
    with pytest.raises(InvalidPartition):
        Partition((1, 0))
    with pytest.raises(InvalidPartition):
        Partition.from_blocks([[0], [2]])


def test_probability_examples():
    assert probability_of_partition(Partition.identity(2)) == Fraction(1, 2)
    assert probability_of_partition(Partition.universal(3)) == 1
    p = Partition.from_blocks([[0, 1], [2]])
    assert probability_of_partition(p) == Fraction(5, 9) == count_pairs(p)


def test_empty_partition():
    with pytest.raises(EmptyPartition):
        probability_of_partition(Partition(()))


def test_relation_examples():
    assert probability_of_relation(2, {(0, 0), (1, 1)}) == Fraction(1, 2)
    assert probability_of_relation(2, {(a, b) for a in range(2) for b in range(2)}) == 1
    p = Partition.from_blocks([[0, 1], [2]])
    assert len(p.pairs()) == 5
    assert probability_of_relation(3, p.pairs()) == Fraction(5, 9)


def test_relation_out_of_range():
    with pytest.raises(PairOutOfRange):
        probability_of_relation(2, {(0, 2)})


def test_class_sizes():
    assert class_sizes(Partition.from_blocks([[0, 1], [2]])) == [2, 1]
    assert class_sizes(Partition.identity(4)) == [1, 1, 1, 1]
    assert class_sizes(Partition.universal(5)) == [5]


def test_commuting_probability():
    assert commuting_probability(C2) == 1
    assert commuting_probability(RZ2) == Fraction(1, 2)
    assert commuting_probability(LZ2) == Fraction(1, 2)


def test_all_partitions_counts_and_order():
    for n in range(1, 8):
        parts = list(all_partitions(n))
        assert len(parts) == BELL[n]
        labels = [p.block_of for p in parts]
        assert labels == sorted(set(labels))


def test_partition_vs_pair_expansion():
    for n in range(1, 7):
        for p in all_partitions(n):
            assert probability_of_partition(p) == probability_of_relation(n, p.pairs())


def test_identity_and_universal():
    for n in range(1, 12):
        assert probability_of_partition(Partition.identity(n)) == Fraction(1, n)
        assert probability_of_partition(Partition.universal(n)) == 1


@given(st.lists(st.integers(0, 5), min_size=1, max_size=14))
def test_lower_bound_and_equality(labels):
    p = Partition.from_labels(labels)
    prob = probability_of_partition(p)
    floor = Fraction(1, p.num_blocks)
    sizes = class_sizes(p)
    assert prob >= floor
    assert (prob == floor) == (len(set(sizes)) == 1)
    assert prob == count_pairs(p)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=10), st.lists(st.integers(0, 4), min_size=1, max_size=10))
def test_refines_matches_pair_inclusion(a, b):
    n = min(len(a), len(b))
    p, q = Partition.from_labels(a[:n]), Partition.from_labels(b[:n])
    assert p.refines(q) == (p.pairs() <= q.pairs())
