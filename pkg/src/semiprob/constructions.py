"""Builders for fibered semigroups over a base semigroup, the right-zero
family with starred fibers, and the left-zero/null family with rows given
by a retraction onto the left zero part."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .core import FiniteSemigroup, _trusted, from_table
from .errors import CoherenceViolation, InvalidSpec, MissingMap, PhiNotFixingL
from .relations import Partition
from .rightrep import theta
from .structure import is_left_cancellative


def left_zero_semigroup(n: int) -> FiniteSemigroup:
    return _trusted([[a] * n for a in range(n)])


def right_zero_semigroup(n: int) -> FiniteSemigroup:
    return _trusted([list(range(n)) for _ in range(n)])


def null_semigroup(n: int) -> FiniteSemigroup:
    return _trusted([[0] * n for _ in range(n)])


def fiber_labels(sizes: Sequence[int]) -> tuple[int, ...]:
    """Base element of each global element; fibers are laid out consecutively."""
    return tuple(x for x, size in enumerate(sizes) for _ in range(size))


@dataclass(frozen=True)
class FiberedSystem:
    """Base semigroup, a fiber size per base element, and for each base pair
    (x, y) a map from fiber x to fiber xy, as a tuple of local indices."""

    base: FiniteSemigroup
    fiber_sizes: tuple[int, ...]
    maps: Mapping[tuple[int, int], tuple[int, ...]] = field(hash=False)


class FiberedSemigroup(NamedTuple):
    semigroup: FiniteSemigroup
    fiber_of: tuple[int, ...]


def _check_system(sys: FiberedSystem) -> None:
    T = sys.base.table
    sizes = sys.fiber_sizes
    if len(sizes) != sys.base.order or any(s < 1 for s in sizes):
        raise InvalidSpec(f"need one fiber size >= 1 per base element, got {list(sizes)!r}")
    for x in sys.base.elements:
        for y in sys.base.elements:
            f = sys.maps.get((x, y))
            if f is None:
                raise MissingMap(f"no map supplied for base pair ({x},{y})")
            if len(f) != sizes[x] or any(not 0 <= v < sizes[T[x][y]] for v in f):
                raise InvalidSpec(f"map ({x},{y}) must send fiber {x} into fiber {T[x][y]}")
    for x in sys.base.elements:
        for y in sys.base.elements:
            xy = T[x][y]
            f_xy = sys.maps[(x, y)]
            for z in sys.base.elements:
                g = sys.maps[(xy, z)]
                h = sys.maps[(x, T[y][z])]
                for a in range(sizes[x]):
                    if g[f_xy[a]] != h[a]:
                        raise CoherenceViolation(x, y, z, a)


def build_fibered(sys: FiberedSystem) -> FiberedSemigroup:
    """Product of a in fiber x with b in fiber y is maps[(x, y)](a) in fiber xy."""
    _check_system(sys)
    T = sys.base.table
    sizes = sys.fiber_sizes
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    fiber_of = fiber_labels(sizes)
    rows = []
    for g in range(offsets[-1]):
        x = fiber_of[g]
        a = g - offsets[x]
        rows.append([offsets[T[x][y]] + sys.maps[(x, y)][a] for y in fiber_of])
    # Coherence guarantees associativity; re-validate anyway.
    return FiberedSemigroup(from_table(len(rows), rows), fiber_of)


def build_construct1(
    base: FiniteSemigroup,
    fiber_sizes: Sequence[int],
    maps: Mapping[tuple[int, int], Sequence[int]],
) -> FiberedSemigroup:
    """Fibered semigroup over a left cancellative base, with maps indexed by
    (t, r) for r in tT and composition law f(t,r) then f(r,q) = f(t,q)."""
    if not is_left_cancellative(base):
        raise InvalidSpec("base semigroup must be left cancellative")
    if len(fiber_sizes) != base.order or any(s < 1 for s in fiber_sizes):
        raise InvalidSpec(f"need one fiber size >= 1 per base element, got {list(fiber_sizes)!r}")
    T = base.table
    reach = {t: set(T[t]) for t in base.elements}
    for (t, r) in maps:
        if t not in reach or r not in reach[t]:
            raise InvalidSpec(f"map slot ({t},{r}) is not reachable: {r} not in {t}T")
    for t in base.elements:
        for r in sorted(reach[t]):
            if (t, r) not in maps:
                raise MissingMap(f"no map supplied for ({t},{r})")
            f = maps[(t, r)]
            if len(f) != fiber_sizes[t] or any(not 0 <= v < fiber_sizes[r] for v in f):
                raise InvalidSpec(f"map ({t},{r}) must send fiber {t} into fiber {r}")
    for t in base.elements:
        for r in reach[t]:
            for q in reach[r]:
                f, g, h = maps[(t, r)], maps[(r, q)], maps[(t, q)]
                for a in range(fiber_sizes[t]):
                    if g[f[a]] != h[a]:
                        # report as base triple (t, x, y) with tx = r, ry = q
                        x = T[t].index(r)
                        y = T[r].index(q)
                        raise CoherenceViolation(t, x, y, a)
    fiber_maps = {
        (t, x): tuple(maps[(t, T[t][x])]) for t in base.elements for x in base.elements
    }
    return build_fibered(FiberedSystem(base, tuple(fiber_sizes), fiber_maps))


def fibers_refine_theta(S: FiniteSemigroup, fiber_of: Sequence[int]) -> tuple[bool, bool]:
    """``(refines, exact)``: every fiber inside one theta class, and fibers
    equal to the theta classes."""
    fibers = Partition.from_labels(fiber_of)
    th = theta(S)
    return fibers.refines(th), fibers == th


@dataclass(frozen=True)
class Construct2Spec:
    m: int
    fiber_sizes: tuple[int, ...]
    stars: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.m < 1 or len(self.fiber_sizes) != self.m:
            raise InvalidSpec(f"need m >= 1 fiber sizes, got m={self.m}, sizes={list(self.fiber_sizes)}")
        if any(s < 1 for s in self.fiber_sizes):
            raise InvalidSpec("fiber sizes must be positive")
        if self.stars is None:
            object.__setattr__(self, "stars", (0,) * self.m)
        if len(self.stars) != self.m or any(
            not 0 <= s < size for s, size in zip(self.stars, self.fiber_sizes)
        ):
            raise InvalidSpec(f"star indices {list(self.stars)} must lie in their fibers")


def construct2_system(spec: Construct2Spec) -> FiberedSystem:
    maps = {
        (x, y): (spec.stars[y],) * spec.fiber_sizes[x]
        for x in range(spec.m)
        for y in range(spec.m)
    }
    return FiberedSystem(right_zero_semigroup(spec.m), tuple(spec.fiber_sizes), maps)


def build_construct2(spec: Construct2Spec) -> FiniteSemigroup:
    """Over an m-element right zero base, every product a*b is the starred
    element of b's fiber."""
    return build_fibered(construct2_system(spec)).semigroup


def build_a_mk(m: int, k: int) -> FiniteSemigroup:
    if m < 1 or k < 2:
        raise InvalidSpec(f"need m >= 1 and k >= 2, got m={m}, k={k}")
    return build_construct2(Construct2Spec(m, (k,) * m))


def build_a_k(m: int, k: int) -> FiniteSemigroup:
    """One fiber of size k+1 (placed first) and m-1 singleton fibers."""
    if m < 2 or k < 1:
        raise InvalidSpec(f"need m >= 2 and k >= 1, got m={m}, k={k}")
    return build_construct2(Construct2Spec(m, (k + 1,) + (1,) * (m - 1)))


def predicted_p_theta_family(m: int, k: int) -> Fraction:
    if m < 2 or k < 1:
        raise InvalidSpec(f"need m >= 2 and k >= 1, got m={m}, k={k}")
    return Fraction((k + 1) ** 2 + m - 1, (m + k) ** 2)


@dataclass(frozen=True)
class Construct3Spec:
    """Left zero part ``0..left_zero_size-1``, then ``extra_size`` further
    elements; ``phi`` retracts everything onto the left zero part."""

    left_zero_size: int
    extra_size: int
    phi: tuple[int, ...]

    def __post_init__(self):
        L, total = self.left_zero_size, self.left_zero_size + self.extra_size
        if L < 1 or self.extra_size < 0:
            raise InvalidSpec("need left_zero_size >= 1 and extra_size >= 0")
        if len(self.phi) != total:
            raise InvalidSpec(f"phi must have {total} entries, got {len(self.phi)}")
        for e in range(L):
            if self.phi[e] != e:
                raise PhiNotFixingL(e, self.phi[e])
        for a, img in enumerate(self.phi):
            if not 0 <= img < L:
                raise InvalidSpec(f"phi({a}) = {img} is outside the left zero part")


def build_construct3(spec: Construct3Spec) -> FiniteSemigroup:
    n = len(spec.phi)
    return from_table(n, [[spec.phi[a]] * n for a in range(n)])
