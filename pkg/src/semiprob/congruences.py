"""Congruences, quotients, Rees congruences, the sigma^(n) tower and the
correspondence beta -> beta/alpha between congruences above alpha and
congruences of the quotient by alpha."""
from __future__ import annotations

from dataclasses import dataclass

from .core import ElementSet, FiniteSemigroup, _trusted
from .errors import NotACongruence, NotAnIdeal, NotNested, SizeMismatch, TooLarge
from .relations import Partition, all_partitions

MAX_CONGRUENCE_ORDER = 7
MAX_IDEAL_ORDER = 16


def congruence_witness(S: FiniteSemigroup, p: Partition):
    """First ``(a, b, x, side)`` breaking compatibility, or None.

    Pairs a < b are scanned lexicographically, then x, left before right.
    """
    if p.size != S.order:
        raise SizeMismatch(f"partition of {p.size} elements on a semigroup of order {S.order}")
    t = S.table
    lab = p.block_of
    n = S.order
    for a in range(n):
        for b in range(a + 1, n):
            if lab[a] != lab[b]:
                continue
            for x in range(n):
                if lab[t[x][a]] != lab[t[x][b]]:
                    return (a, b, x, "left")
                if lab[t[a][x]] != lab[t[b][x]]:
                    return (a, b, x, "right")
    return None


def is_congruence(S: FiniteSemigroup, p: Partition) -> bool:
    return congruence_witness(S, p) is None


@dataclass(frozen=True)
class Congruence:
    """A partition checked to be two-sided compatible with ``base``."""

    base: FiniteSemigroup
    partition: Partition

    def __post_init__(self):
        w = congruence_witness(self.base, self.partition)
        if w is not None:
            raise NotACongruence(*w)

    @classmethod
    def identity(cls, S: FiniteSemigroup) -> "Congruence":
        return cls(S, Partition.identity(S.order))

    @classmethod
    def universal(cls, S: FiniteSemigroup) -> "Congruence":
        return cls(S, Partition.universal(S.order))

    def related(self, a: int, b: int) -> bool:
        return self.partition.related(a, b)

    def __le__(self, other: "Congruence") -> bool:
        return self.partition.refines(other.partition)


@dataclass(frozen=True)
class Ideal:
    members: ElementSet

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))


def ideal_witness(S: FiniteSemigroup, members):
    """First ``(member, other, product, side)`` leaving the set, or None."""
    members = frozenset(members)
    t = S.table
    for i in sorted(members):
        for a in S.elements:
            if t[a][i] not in members:
                return (i, a, t[a][i], "left")
            if t[i][a] not in members:
                return (i, a, t[i][a], "right")
    return None


def make_ideal(S: FiniteSemigroup, members) -> Ideal:
    members = frozenset(members)
    if not members:
        raise NotAnIdeal(None, None, None, "empty")
    if any(not 0 <= m < S.order for m in members):
        raise NotAnIdeal(None, None, None, "out-of-range")
    w = ideal_witness(S, members)
    if w is not None:
        raise NotAnIdeal(*w)
    return Ideal(members)


def enumerate_congruences(S: FiniteSemigroup) -> list[Congruence]:
    """All congruences, ordered lexicographically by block labels (so the
    universal relation comes first and the identity last)."""
    if S.order > MAX_CONGRUENCE_ORDER:
        raise TooLarge(S.order, MAX_CONGRUENCE_ORDER, "order")
    return [Congruence(S, p) for p in all_partitions(S.order) if is_congruence(S, p)]


def quotient(S: FiniteSemigroup, sigma: Congruence, check: bool = __debug__):
    """Factor semigroup on block labels, plus the projection ``block_of``."""
    lab = sigma.partition.block_of
    blocks = sigma.partition.blocks()
    reps = [b[0] for b in blocks]
    t = S.table
    rows = [[lab[t[r][s]] for s in reps] for r in reps]
    if check:
        for a in S.elements:
            for b in S.elements:
                assert rows[lab[a]][lab[b]] == lab[t[a][b]], "quotient not well defined"
    return _trusted(rows), lab


def rees_congruence(S: FiniteSemigroup, I) -> Congruence:
    members = I.members if isinstance(I, Ideal) else make_ideal(S, I).members
    low = min(members)
    labels = [low if x in members else x for x in S.elements]
    return Congruence(S, Partition.from_labels(labels))


def rees_quotient(S: FiniteSemigroup, I) -> FiniteSemigroup:
    return quotient(S, rees_congruence(S, I))[0]


def ideals(S: FiniteSemigroup) -> list[Ideal]:
    """All nonempty two-sided ideals, by size then lexicographically."""
    n = S.order
    if n > MAX_IDEAL_ORDER:
        raise TooLarge(n, MAX_IDEAL_ORDER, "order")
    t = S.table
    # closure[x]: bitmask of {x} u Ax u xA u AxA
    closure = []
    for x in range(n):
        mask = 1 << x
        for a in range(n):
            mask |= 1 << t[a][x]
            mask |= 1 << t[x][a]
            for b in range(n):
                mask |= 1 << t[t[a][x]][b]
        closure.append(mask)
    found = []
    for mask in range(1, 1 << n):
        m = mask
        ok = True
        while m:
            low = m & -m
            x = low.bit_length() - 1
            if closure[x] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            found.append(tuple(x for x in range(n) if mask >> x & 1))
    found.sort(key=lambda members: (len(members), members))
    return [Ideal(frozenset(m)) for m in found]


def sigma_step(S: FiniteSemigroup, sigma: Congruence) -> Congruence:
    """(a, b) related iff (xa, xb) is sigma-related for every x."""
    lab = sigma.partition.block_of
    t = S.table
    keys = [tuple(lab[row[a]] for row in t) for a in S.elements]
    nxt = Congruence(S, Partition.from_labels(keys))
    assert sigma <= nxt, "sigma step must contain its input"
    return nxt


def sigma_tower(S: FiniteSemigroup, sigma: Congruence) -> list[Congruence]:
    """sigma^(0), sigma^(1), ... up to (not repeating) the first fixpoint."""
    tower = [sigma]
    while True:
        nxt = sigma_step(S, tower[-1])
        if nxt.partition == tower[-1].partition:
            return tower
        tower.append(nxt)


def tower_entry(S: FiniteSemigroup, sigma: Congruence, n: int) -> Congruence:
    """sigma^(n) for any n >= 0, using stabilization past the fixpoint."""
    tower = sigma_tower(S, sigma)
    return tower[min(n, len(tower) - 1)]


def phi(S: FiniteSemigroup, alpha: Congruence, beta: Congruence) -> Congruence:
    """beta/alpha as a congruence on ``quotient(S, alpha)``."""
    al, be = alpha.partition, beta.partition
    n = S.order
    for a in range(n):
        for b in range(a + 1, n):
            if al.related(a, b) and not be.related(a, b):
                raise NotNested(a, b)
    Q, _ = quotient(S, alpha, check=False)
    reps = [blk[0] for blk in al.blocks()]
    return Congruence(Q, Partition.from_labels(be.block_of[r] for r in reps))
