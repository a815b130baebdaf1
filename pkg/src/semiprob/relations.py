"""Partitions of ``0..n-1`` and the exact probability that a uniformly random
ordered pair is related."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import EmptyPartition, InvalidPartition, PairOutOfRange

Rational = Fraction


def _normalize(labels: Sequence) -> tuple[int, ...]:
    seen = {}
    return tuple(seen.setdefault(lab, len(seen)) for lab in labels)


@dataclass(frozen=True)
class Partition:
    """Equivalence relation stored as normalized block labels.

    Labels are numbered in order of each block's least member, so two
    partitions are equal iff their ``block_of`` tuples are.
    """

    block_of: tuple[int, ...]

    def __post_init__(self):
        if _normalize(self.block_of) != tuple(self.block_of):
            raise InvalidPartition(f"labels {self.block_of!r} are not normalized")

    @classmethod
    def from_labels(cls, labels: Iterable) -> "Partition":
        return cls(_normalize(list(labels)))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "Partition":
        blocks = [list(b) for b in blocks]
        members = sorted(x for b in blocks for x in b)
        if n is None:
            n = len(members)
        if members != list(range(n)):
            raise InvalidPartition(f"blocks {blocks!r} do not partition range({n})")
        labels = [0] * n
        for i, b in enumerate(blocks):
            for x in b:
                labels[x] = i
        return cls.from_labels(labels)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def size(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    def blocks(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_blocks)]
        for x, lab in enumerate(self.block_of):
            out[lab].append(x)
        return out

    def related(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def pairs(self) -> set[tuple[int, int]]:
        return {(a, b) for blk in self.blocks() for a in blk for b in blk}

    def is_identity(self) -> bool:
        return self.num_blocks == self.size

    def is_universal(self) -> bool:
        return self.num_blocks <= 1

    def refines(self, other: "Partition") -> bool:
        """True iff every pair related here is related in ``other``."""
        image = {}
        for lab, olab in zip(self.block_of, other.block_of):
            if image.setdefault(lab, olab) != olab:
                return False
        return True

    def __str__(self):
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks())


def class_sizes(p: Partition) -> list[int]:
    counts = Counter(p.block_of)
    return [counts[i] for i in range(p.num_blocks)]


def probability_of_partition(p: Partition) -> Fraction:
    """Sum of squared class sizes over n squared."""
    if p.size == 0:
        raise EmptyPartition("partition of the empty set")
    return Fraction(sum(t * t for t in class_sizes(p)), p.size ** 2)


def probability_of_relation(n: int, pairs: Iterable[tuple[int, int]]) -> Fraction:
    if n < 1:
        raise EmptyPartition("relation on the empty set")
    pairs = set(pairs)
    for pair in pairs:
        if not all(0 <= c < n for c in pair):
            raise PairOutOfRange(pair, n)
    return Fraction(len(pairs), n * n)


def commuting_probability(S) -> Fraction:
    t = S.table
    n = len(t)
    hits = sum(1 for a in range(n) for b in range(n) if t[a][b] == t[b][a])
    return Fraction(hits, n * n)


def all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``range(n)`` as restricted growth strings, in
    lexicographic label order."""
    if n == 0:
        return
    labels = [0] * n
    # maxes[i] = max(labels[:i])
    maxes = [0] * n
    while True:
        yield Partition(tuple(labels))
        i = n - 1
        while i > 0 and labels[i] > maxes[i]:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        for j in range(i + 1, n):
            labels[j] = 0
            maxes[j] = max(maxes[j - 1], labels[j - 1])
