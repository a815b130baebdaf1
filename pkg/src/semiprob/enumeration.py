"""Exhaustive generation of labeled semigroups, isomorphism search, brute
force oracles, and the theorem-verification sweeps built on them."""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import _purekernels, kernels
from .congruences import (
    Congruence,
    enumerate_congruences,
    phi,
    quotient,
    sigma_step,
    sigma_tower,
    tower_entry,
)
from .constructions import (
    Construct2Spec,
    Construct3Spec,
    build_a_k,
    build_a_mk,
    build_construct2,
    build_construct3,
    fiber_labels,
    fibers_refine_theta,
    predicted_p_theta_family,
)
from .core import FiniteSemigroup, from_flat, power_set
from .errors import InvalidSpec, TooLarge, UnknownCheck
from .relations import Partition, all_partitions
from .rightrep import is_left_reductive, matrix_product, p_theta, rho, right_matrix, theta
from .structure import decompose_left_zero_by_null, is_ideal_extension_left_zero_by_nilpotent

MAX_ORDER = 5
UNGATED_ORDER = 4
MAX_ISO_ORDER = 8


def _check_order(n: int, allow_large: bool) -> None:
    if n < 1:
        raise InvalidSpec(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise TooLarge(n, MAX_ORDER, "order")
    if n > UNGATED_ORDER and not allow_large:
        raise TooLarge(n, UNGATED_ORDER, "order", "order 5 needs the explicit opt-in flag")


def _first_rows(n: int):
    return [tuple(r) for r in itertools.product(range(n), repeat=n)]


def _enumerate_chunk(args):
    n, prefixes = args
    return b"".join(kernels.enumerate_tables(n, p) for p in prefixes)


def enumerate_flat(n: int, jobs: int = 1) -> bytes:
    """Every associative table of order n, concatenated row-major, in
    lexicographic order.  With jobs > 1 the first-row prefixes are split into
    contiguous chunks whose results are concatenated in prefix order."""
    if jobs <= 1 or n < 3:
        return kernels.enumerate_tables(n)
    rows = _first_rows(n)
    size = -(-len(rows) // (jobs * 4))
    chunks = [(n, rows[i:i + size]) for i in range(0, len(rows), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return b"".join(pool.map(_enumerate_chunk, chunks))


@lru_cache(maxsize=None)
def _cached_tables(n: int) -> tuple[tuple[int, ...], ...]:
    raw = kernels.enumerate_tables(n)
    cells = n * n
    return tuple(tuple(raw[i:i + cells]) for i in range(0, len(raw), cells))


def enumerate_semigroups(n: int, jobs: int = 1, allow_large: bool = False) -> Iterator[FiniteSemigroup]:
    """Stream every associative n x n table exactly once, lexicographically."""
    _check_order(n, allow_large)
    cells = n * n
    if n <= UNGATED_ORDER and jobs <= 1:
        flats = _cached_tables(n)
    else:
        raw = enumerate_flat(n, jobs)
        flats = (raw[i:i + cells] for i in range(0, len(raw), cells))
    for flat in flats:
        yield from_flat(n, flat, validate=False)


def count_semigroups(n: int, jobs: int = 1, allow_large: bool = False) -> int:
    _check_order(n, allow_large)
    if n <= UNGATED_ORDER and jobs <= 1:
        return len(_cached_tables(n))
    return len(enumerate_flat(n, jobs)) // (n * n)


def naive_semigroup_tables(n: int) -> list[tuple[int, ...]]:
    """Filter all n^(n^2) tables by the full triple scan (n <= 3)."""
    if n > 3:
        raise TooLarge(n, 3, "naive filter order")
    return [
        flat
        for flat in itertools.product(range(n), repeat=n * n)
        if _purekernels.first_nonassociative(flat, n) is None
    ]


def _invariant(S: FiniteSemigroup, a: int):
    t = S.table
    return (
        t[a][a] == a,
        t[t[a][a]][a] == a,
        len(set(t[a])),
        len(set(row[a] for row in t)),
        sum(1 for x in S.elements if t[x][x] == a),
    )


def find_isomorphism(S1: FiniteSemigroup, S2: FiniteSemigroup):
    """A bijection f (as a tuple) with f(ab) = f(a)f(b), or None."""
    n = S1.order
    if S2.order != n:
        return None
    if n > MAX_ISO_ORDER:
        raise TooLarge(n, MAX_ISO_ORDER, "isomorphism order")
    t1, t2 = S1.table, S2.table
    inv2 = {}
    for b in S2.elements:
        inv2.setdefault(_invariant(S2, b), []).append(b)
    candidates = [inv2.get(_invariant(S1, a), []) for a in S1.elements]
    if any(not c for c in candidates):
        return None
    f = [-1] * n
    used = [False] * n

    def ok(a):
        fa = f[a]
        for x in range(a + 1):
            fx = f[x]
            for p, q, r in ((a, x, t1[a][x]), (x, a, t1[x][a])):
                if f[r] >= 0 and f[r] != t2[f[p]][f[q]]:
                    return False
            for y in range(a + 1):
                if t1[x][y] == a and t2[fx][f[y]] != fa:
                    return False
        return True

    def search(a):
        if a == n:
            return True
        for b in candidates[a]:
            if used[b]:
                continue
            f[a], used[b] = b, True
            if ok(a) and search(a + 1):
                return True
            f[a], used[b] = -1, False
        return False

    return tuple(f) if search(0) else None


def are_isomorphic(S1: FiniteSemigroup, S2: FiniteSemigroup) -> bool:
    return find_isomorphism(S1, S2) is not None


def brute_theta(S: FiniteSemigroup) -> Partition:
    """theta straight from its definition: a ~ b iff xa = xb for every x."""
    t = S.table
    n = S.order
    labels = []
    for a in range(n):
        for b in range(a + 1):
            if all(t[x][a] == t[x][b] for x in range(n)):
                labels.append(labels[b] if b < a else a)
                break
    return Partition.from_labels(labels)


def power_oracle_step(S: FiniteSemigroup, sigma: Partition, n: int) -> Partition:
    """sigma^(n) via the A^n characterization: (a, b) related iff (xa, xb)
    is sigma-related for every x in A^n."""
    An = sorted(power_set(S, n))
    lab = sigma.block_of
    t = S.table
    return Partition.from_labels(tuple(lab[t[x][a]] for x in An) for a in S.elements)


def constructed_samples(count: int = 100, max_order: int = 8, seed: int = 0) -> list[FiniteSemigroup]:
    """Deterministic mix of builder outputs of order <= max_order."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = len(out) % 4
        if kind == 0:
            m = rng.randint(1, 4)
            sizes = [1] * m
            for _ in range(rng.randint(0, max_order - m)):
                sizes[rng.randrange(m)] += 1
            stars = tuple(rng.randrange(s) for s in sizes)
            out.append(build_construct2(Construct2Spec(m, tuple(sizes), stars)))
        elif kind == 1:
            L = rng.randint(1, 4)
            extra = rng.randint(0, max_order - L)
            phi_map = tuple(range(L)) + tuple(rng.randrange(L) for _ in range(extra))
            out.append(build_construct3(Construct3Spec(L, extra, phi_map)))
        elif kind == 2:
            m = rng.randint(1, max_order // 2)
            k = rng.randint(2, max_order // m)
            out.append(build_a_mk(m, k))
        else:
            m = rng.randint(2, max_order - 1)
            k = rng.randint(1, max_order - m)
            out.append(build_a_k(m, k))
    return out


@dataclass
class EnumerationReport:
    check: str
    order: int | None
    count: int = 0
    population: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, subject, check_id, **detail):
        self.counterexamples.append({"subject": subject, "check": check_id, **detail})


def _table(S):
    return [list(r) for r in S.table]


def _population(report, max_order, jobs, allow_large):
    for n in range(1, max_order + 1):
        k = 0
        for S in enumerate_semigroups(n, jobs=jobs, allow_large=allow_large):
            k += 1
            yield S
        report.population[n] = k
        report.count += k


def _verify_t1(report, max_size, **_):
    for n in range(1, max_size + 1):
        k = 0
        for p in all_partitions(n):
            k += 1
            sizes = [0] * n
            for lab in p.block_of:
                sizes[lab] += 1
            m = p.num_blocks
            sizes = sizes[:m]
            prob = Fraction(sum(s * s for s in sizes), n * n)
            floor = Fraction(1, m)
            if prob < floor:
                report.fail(list(p.block_of), "T1.bound", p=str(prob))
            if (prob == floor) != (min(sizes) == max(sizes)):
                report.fail(list(p.block_of), "T1.equality", p=str(prob))
        report.population[n] = k
        report.count += k


def _verify_t2(report, max_m, max_k, **_):
    for m in range(1, max_m + 1):
        for k in range(2, max_k + 1):
            report.count += 1
            S = build_a_mk(m, k)
            prob = p_theta(S)
            report.rows.append((m, k, prob))
            if prob != Fraction(1, m):
                report.fail({"m": m, "k": k}, "T2.probability", p=str(prob))
            if not fibers_refine_theta(S, fiber_labels((k,) * m))[1]:
                report.fail({"m": m, "k": k}, "T2.fibers")
            if is_left_reductive(S):
                report.fail({"m": m, "k": k}, "T2.left_reductive")


def _verify_t3(report, max_m, max_k, **_):
    for m in range(2, max_m + 1):
        for k in range(1, max_k + 1):
            report.count += 1
            prob = p_theta(build_a_k(m, k))
            report.rows.append((m, k, prob))
            if prob != predicted_p_theta_family(m, k):
                report.fail({"m": m, "k": k}, "T3.formula", p=str(prob))


def _verify_t4(report, max_order, jobs, allow_large, **_):
    for S in _population(report, max_order, jobs, allow_large):
        full = p_theta(S) == 1
        dec = decompose_left_zero_by_null(S)
        if full != (dec is not None):
            report.fail(_table(S), "T4.row_constant")
        elif dec is not None and dec.rebuild() != S:
            report.fail(_table(S), "T4.rebuild")


def _reaches_universal(S, sigma):
    return sigma_tower(S, sigma)[-1].partition.is_universal()


def _verify_t5(report, max_order, jobs, allow_large, **_):
    for S in _population(report, max_order, jobs, allow_large):
        if _reaches_universal(S, Congruence.identity(S)) != is_ideal_extension_left_zero_by_nilpotent(S):
            report.fail(_table(S), "T5.equivalence")


def _verify_t6(report, max_order, jobs, allow_large, **_):
    for S in _population(report, max_order, jobs, allow_large):
        for sigma in enumerate_congruences(S):
            Q, _ = quotient(S, sigma)
            lhs = sigma_step(S, sigma).partition.is_universal()
            if lhs != (decompose_left_zero_by_null(Q) is not None):
                report.fail(_table(S), "T6.equivalence", sigma=list(sigma.partition.block_of))


def _verify_t7(report, max_order, jobs, allow_large, **_):
    for S in _population(report, max_order, jobs, allow_large):
        for sigma in enumerate_congruences(S):
            Q, _ = quotient(S, sigma)
            if _reaches_universal(S, sigma) != is_ideal_extension_left_zero_by_nilpotent(Q):
                report.fail(_table(S), "T7.equivalence", sigma=list(sigma.partition.block_of))


def _verify_phi(report, max_order, jobs, allow_large, **_):
    for S in _population(report, max_order, jobs, allow_large):
        congs = enumerate_congruences(S)
        for sigma in congs:
            Q, _ = quotient(S, sigma)
            tag = dict(sigma=list(sigma.partition.block_of))
            tower = sigma_tower(S, sigma)
            theta_q = Congruence(Q, theta(Q))
            for n in range(1, len(tower) + 2):
                image = phi(S, sigma, tower_entry(S, sigma, n)).partition
                if image != tower_entry(Q, theta_q, n - 1).partition:
                    report.fail(_table(S), "PHI.tower_exchange", n=n, **tag)
            if not phi(S, sigma, sigma).partition.is_identity():
                report.fail(_table(S), "PHI.bottom", **tag)
            if not phi(S, sigma, Congruence.universal(S)).partition.is_universal():
                report.fail(_table(S), "PHI.top", **tag)
            above = [b for b in congs if sigma <= b]
            images = [phi(S, sigma, b) for b in above]
            if len({im.partition for im in images}) != len(images):
                report.fail(_table(S), "PHI.injective", **tag)
            if len(images) != len(enumerate_congruences(Q)):
                report.fail(_table(S), "PHI.onto", **tag)
            for b1, i1 in zip(above, images):
                for b2, i2 in zip(above, images):
                    if (b1 <= b2) != (i1 <= i2):
                        report.fail(_table(S), "PHI.order", **tag)


def _hom_failures(S):
    n = S.order
    t = S.table
    mats = [right_matrix(S, a) for a in S.elements]
    maps = [rho(S, a) for a in S.elements]
    th, bt = theta(S), brute_theta(S)
    if th != bt:
        yield "HOM.brute_theta"
    for a in range(n):
        for b in range(n):
            if matrix_product(mats[a], mats[b]) != mats[t[a][b]]:
                yield "HOM.matrix"
            if maps[a].then(maps[b]) != maps[t[a][b]]:
                yield "HOM.translation"
            same = mats[a] == mats[b]
            if same != (maps[a] == maps[b]) or same != th.related(a, b):
                yield "HOM.kernel"


def _verify_hom(report, max_order, jobs, allow_large, samples=100, **_):
    population = list(_population(report, max_order, jobs, allow_large))
    built = constructed_samples(samples)
    report.population["constructed"] = len(built)
    report.count += len(built)
    for S in population + built:
        for failure in sorted(set(_hom_failures(S))):
            report.fail(_table(S), failure)


def _verify_tower(report, max_order, jobs, allow_large, **_):
    for S in _population(report, max_order, jobs, allow_large):
        if theta(S) != brute_theta(S):
            report.fail(_table(S), "TOWER.brute_theta")
        iota = Congruence.identity(S)
        theta_c = Congruence(S, theta(S))
        for k in range(S.order + 2):
            if tower_entry(S, theta_c, k).partition != tower_entry(S, iota, k + 1).partition:
                report.fail(_table(S), "TOWER.shift", n=k)
        for sigma in enumerate_congruences(S):
            for n in range(1, 4):
                if tower_entry(S, sigma, n).partition != power_oracle_step(S, sigma.partition, n):
                    report.fail(_table(S), "TOWER.power_oracle", n=n, sigma=list(sigma.partition.block_of))


CHECKS = {
    "T1": (_verify_t1, {"max_size": 10}),
    "T2": (_verify_t2, {"max_m": 6, "max_k": 5}),
    "T3": (_verify_t3, {"max_m": 3, "max_k": 100}),
    "T4": (_verify_t4, {"max_order": 4}),
    "T5": (_verify_t5, {"max_order": 4}),
    "T6": (_verify_t6, {"max_order": 3}),
    "T7": (_verify_t7, {"max_order": 3}),
    "PHI": (_verify_phi, {"max_order": 3}),
    "HOM": (_verify_hom, {"max_order": 3}),
    "TOWER": (_verify_tower, {"max_order": 3}),
}

BOUND_LIMITS = {"max_size": 12, "max_m": 20, "max_k": 1000, "max_order": MAX_ORDER}


def verify_theorem(check: str, jobs: int = 1, allow_large: bool = False, **bounds) -> EnumerationReport:
    """Run one named check over its population.  Unset bounds take the
    defaults in ``CHECKS``; bounds that do not apply to the check are ignored."""
    if check not in CHECKS:
        raise UnknownCheck(f"unknown check {check!r}; expected one of {', '.join(CHECKS)}")
    fn, defaults = CHECKS[check]
    params = dict(defaults)
    for key, value in bounds.items():
        if value is not None and key in defaults:
            params[key] = value
    for key, value in params.items():
        if value < 1:
            raise InvalidSpec(f"{key} must be positive, got {value}")
        if value > BOUND_LIMITS[key]:
            raise TooLarge(value, BOUND_LIMITS[key], key)
    if "max_order" in params:
        _check_order(params["max_order"], allow_large)
    report = EnumerationReport(check, params.get("max_order"))
    fn(report, jobs=jobs, allow_large=allow_large, **params)
    return report
