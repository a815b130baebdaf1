"""Finite semigroups as validated Cayley tables.

Elements are the integers ``0..n-1`` and ``table[x][a]`` is the product
``x*a``.  Element sets (A^n, E(A), ideals) are plain frozensets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import BadEntry, BadShape, NotAssociative

ElementSet = frozenset


@dataclass(frozen=True)
class FiniteSemigroup:
    """Immutable associative Cayley table.  Build with :func:`from_table`."""

    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def __len__(self):
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)

    def column(self, a: int) -> tuple[int, ...]:
        return tuple(row[a] for row in self.table)

    def relabel(self, perm: Sequence[int]) -> "FiniteSemigroup":
        """Transport the table along the bijection ``x -> perm[x]``."""
        n = self.order
        new = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                new[perm[a]][perm[b]] = perm[self.table[a][b]]
        return _trusted(new)

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in self.table)


def _trusted(rows) -> FiniteSemigroup:
    # Skip validation; callers guarantee range and associativity.
    return FiniteSemigroup(tuple(tuple(r) for r in rows))


def from_flat(n: int, flat: Sequence[int], validate: bool = True) -> FiniteSemigroup:
    rows = [tuple(flat[i * n:(i + 1) * n]) for i in range(n)]
    if validate:
        return from_table(n, rows)
    return _trusted(rows)


def from_table(n: int, entries: Sequence[Sequence[int]]) -> FiniteSemigroup:
    """Validate ``entries`` as an order-``n`` semigroup.

    Raises BadEntry for the first out-of-range cell (row-major) and
    NotAssociative with the lexicographically first failing triple.
    """
    if n < 1:
        raise BadShape(f"order must be positive, got {n}")
    if len(entries) != n or any(len(row) != n for row in entries):
        raise BadShape(f"table must be {n}x{n}")
    for i, row in enumerate(entries):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise BadEntry(i, j, v, n)
    rows = tuple(tuple(row) for row in entries)
    witness = kernels.first_nonassociative([v for row in rows for v in row], n)
    if witness is not None:
        raise NotAssociative(*witness)
    return FiniteSemigroup(rows)


def product(S: FiniteSemigroup, a: int, b: int) -> int:
    return S.table[a][b]


def set_product(S: FiniteSemigroup, X, Y) -> ElementSet:
    t = S.table
    return frozenset(t[x][y] for x in X for y in Y)


def power_set(S: FiniteSemigroup, n: int) -> ElementSet:
    """A^n, the set of all n-fold products."""
    if n < 1:
        raise ValueError("power must be at least 1")
    everything = frozenset(S.elements)
    current = everything
    for _ in range(n - 1):
        nxt = set_product(S, everything, current)
        if nxt == current:
            break
        current = nxt
    return current


def idempotents(S: FiniteSemigroup) -> ElementSet:
    return frozenset(e for e in S.elements if S.table[e][e] == e)


def trivial() -> FiniteSemigroup:
    return _trusted([[0]])
