"""Structural predicates and the left-zero-by-null / left-zero-by-nilpotent
decompositions."""
from __future__ import annotations

from dataclasses import dataclass

from .congruences import ideal_witness, rees_quotient
from .core import ElementSet, FiniteSemigroup, idempotents, power_set


def is_left_cancellative(S: FiniteSemigroup) -> bool:
    return all(len(set(row)) == S.order for row in S.table)


def is_left_zero(S: FiniteSemigroup) -> bool:
    return all(v == a for a, row in enumerate(S.table) for v in row)


def is_right_zero(S: FiniteSemigroup) -> bool:
    return all(v == b for row in S.table for b, v in enumerate(row))


def zero_element(S: FiniteSemigroup):
    t = S.table
    for z in S.elements:
        if all(t[a][z] == z and t[z][a] == z for a in S.elements):
            return z
    return None


def is_null(S: FiniteSemigroup) -> bool:
    z = zero_element(S)
    return z is not None and all(v == z for row in S.table for v in row)


def is_nilpotent(S: FiniteSemigroup) -> bool:
    z = zero_element(S)
    # The chain A >= A^2 >= ... is stable by A^n.
    return z is not None and power_set(S, S.order) == {z}


def nilpotency_index(S: FiniteSemigroup):
    """Least k with A^k = {0}, or None when S is not nilpotent."""
    z = zero_element(S)
    if z is None:
        return None
    for k in range(1, S.order + 1):
        if power_set(S, k) == {z}:
            return k
    return None


@dataclass(frozen=True)
class LeftZeroByNullDecomposition:
    """E(A) together with a -> a^2; every product ab equals phi_map[a]."""

    idempotent_ideal: ElementSet
    phi_map: tuple[int, ...]

    def relabeling(self) -> list[int]:
        """Old label -> position with idempotents listed first."""
        order = sorted(self.idempotent_ideal) + sorted(
            set(range(len(self.phi_map))) - self.idempotent_ideal
        )
        perm = [0] * len(order)
        for new, old in enumerate(order):
            perm[old] = new
        return perm

    def to_construct3_spec(self):
        from .constructions import Construct3Spec

        perm = self.relabeling()
        phi = [0] * len(self.phi_map)
        for old, img in enumerate(self.phi_map):
            phi[perm[old]] = perm[img]
        return Construct3Spec(len(self.idempotent_ideal), len(phi) - len(self.idempotent_ideal), tuple(phi))

    def rebuild(self) -> FiniteSemigroup:
        """Rebuild through the left-zero/null construction, on the original labels."""
        from .constructions import build_construct3

        perm = self.relabeling()
        inverse = [0] * len(perm)
        for old, new in enumerate(perm):
            inverse[new] = old
        return build_construct3(self.to_construct3_spec()).relabel(inverse)


def decompose_left_zero_by_null(S: FiniteSemigroup):
    """Decomposition when every row is constant (xa = xb for all x, a, b),
    otherwise None."""
    t = S.table
    if any(len(set(row)) != 1 for row in t):
        return None
    return LeftZeroByNullDecomposition(idempotents(S), tuple(t[a][a] for a in S.elements))


def is_left_zero_subsemigroup(S: FiniteSemigroup, members) -> bool:
    t = S.table
    return all(t[e][f] == e for e in members for f in members)


def is_ideal_extension_left_zero_by_nilpotent(S: FiniteSemigroup) -> bool:
    E = idempotents(S)
    if not E or not is_left_zero_subsemigroup(S, E):
        return False
    if ideal_witness(S, E) is not None:
        return False
    return is_nilpotent(rees_quotient(S, E))
