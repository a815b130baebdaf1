import itertools

import pytest

from canon import C2, LZ2, N2, N3, ONE, RZ2
from semiprob import (
    Congruence,
    Partition,
    congruence_witness,
    enumerate_congruences,
    ideals,
    is_congruence,
    make_ideal,
    phi,
    quotient,
    rees_congruence,
    rees_quotient,
    sigma_step,
    sigma_tower,
    theta,
    tower_entry,
)
from semiprob.enumeration import power_oracle_step
from semiprob.errors import NotACongruence, NotAnIdeal, NotNested, SizeMismatch, TooLarge
from semiprob.relations import all_partitions

B = Partition.from_blocks
N3_THETA = B([[0, 1], [2]])


def brute_congruence(S, p):
    n = S.order
    t = S.table
    for a, b, x in itertools.product(range(n), repeat=3):
        if p.related(a, b) and not (p.related(t[x][a], t[x][b]) and p.related(t[a][x], t[b][x])):
            return False
    return True


def brute_ideals(S):
    found = []
    for r in range(1, S.order + 1):
        for members in itertools.combinations(S.elements, r):
            m = set(members)
            if all(S.table[a][i] in m and S.table[i][a] in m for i in m for a in S.elements):
                found.append(frozenset(m))
    return found


def test_is_congruence_examples():
    assert is_congruence(N3, N3_THETA)
    assert congruence_witness(N3, B([[0, 2], [1]])) == (0, 2, 2, "left")
    for S in (C2, LZ2, N3, RZ2):
        assert is_congruence(S, Partition.identity(S.order))


def test_is_congruence_size_mismatch():
    with pytest.raises(SizeMismatch):
        is_congruence(N3, Partition.identity(2))


def test_congruence_type_validates():
    with pytest.raises(NotACongruence) as exc:
        Congruence(N3, B([[0, 2], [1]]))
    assert exc.value.witness() == [0, 2, 2, "left"]


def test_is_congruence_matches_brute(upto3):
    for S in upto3:
        for p in all_partitions(S.order):
            assert is_congruence(S, p) == brute_congruence(S, p)


def test_enumerate_congruences_examples():
    assert [c.partition for c in enumerate_congruences(C2)] == [Partition.universal(2), Partition.identity(2)]
    assert len(enumerate_congruences(N2)) == 2
    assert [c.partition for c in enumerate_congruences(N3)] == [
        Partition.universal(3),
        N3_THETA,
        Partition.identity(3),
    ]


def test_enumerate_congruences_guard():
    from semiprob.constructions import null_semigroup

    with pytest.raises(TooLarge):
        enumerate_congruences(null_semigroup(8))


def test_quotient_examples():
    Q, proj = quotient(N3, Congruence(N3, N3_THETA))
    assert Q == N2
    assert proj == (0, 0, 1)
    for S in (N3, LZ2, C2):
        assert quotient(S, Congruence.identity(S))[0] == S
        assert quotient(S, Congruence.universal(S))[0] == ONE


def test_rees_congruence_examples():
    assert rees_congruence(N3, {0, 1}).partition == N3_THETA
    assert rees_congruence(N3, {0}).partition == Partition.identity(3)
    assert rees_congruence(N3, {0, 1, 2}).partition == Partition.universal(3)
    with pytest.raises(NotAnIdeal):
        rees_congruence(N3, {0, 2})


def test_rees_quotient_examples():
    assert rees_quotient(N3, {0, 1}) == N2
    assert rees_quotient(N3, {0}) == N3
    assert rees_quotient(LZ2, {0, 1}) == ONE


def test_rees_quotient_collapsed_block_is_zero(upto3):
    from semiprob import zero_element

    for S in upto3:
        for I in ideals(S):
            Q = rees_quotient(S, I)
            _, proj = quotient(S, rees_congruence(S, I))
            assert zero_element(Q) == proj[min(I.members)]


def test_ideals_examples():
    assert [sorted(I) for I in ideals(N3)] == [[0], [0, 1], [0, 1, 2]]
    assert [sorted(I) for I in ideals(LZ2)] == [[0, 1]]
    assert [sorted(I) for I in ideals(ONE)] == [[0]]


def test_ideals_match_brute(upto3):
    for S in upto3:
        assert [I.members for I in ideals(S)] == brute_ideals(S)


def test_make_ideal_rejects():
    with pytest.raises(NotAnIdeal) as exc:
        make_ideal(LZ2, {0})
    assert exc.value.witness() == [0, 1, 1, "left"]
    with pytest.raises(NotAnIdeal):
        make_ideal(N3, set())


def test_sigma_step_examples():
    assert sigma_step(N3, Congruence.identity(N3)).partition == theta(N3)
    assert sigma_step(N3, Congruence(N3, N3_THETA)).partition == Partition.universal(3)
    assert sigma_step(RZ2, Congruence.identity(RZ2)).partition == Partition.identity(2)


def test_sigma_tower_examples():
    assert [c.partition for c in sigma_tower(N3, Congruence.identity(N3))] == [
        Partition.identity(3),
        N3_THETA,
        Partition.universal(3),
    ]
    assert len(sigma_tower(RZ2, Congruence.identity(RZ2))) == 1
    for S in (N3, LZ2, C2):
        assert [c.partition for c in sigma_tower(S, Congruence.universal(S))] == [Partition.universal(S.order)]


def test_tower_is_ascending_and_bounded(upto4):
    for S in upto4:
        for sigma in enumerate_congruences(S):
            tower = sigma_tower(S, sigma)
            assert len(tower) <= S.order
            for lo, hi in zip(tower, tower[1:]):
                assert lo <= hi and lo.partition != hi.partition
                assert hi.partition.num_blocks < lo.partition.num_blocks


def test_phi_examples():
    alpha = Congruence(N3, N3_THETA)
    omega = Congruence.universal(N3)
    image = phi(N3, alpha, omega)
    assert image.base == N2 and image.partition == Partition.universal(2)
    image = phi(N3, Congruence.identity(N3), alpha)
    assert image.base == N3 and image.partition == N3_THETA
    step = sigma_step(N3, alpha)
    assert phi(N3, alpha, step).partition == theta(N2) == Partition.universal(2)


def test_phi_not_nested():
    with pytest.raises(NotNested):
        phi(N3, Congruence(N3, N3_THETA), Congruence.identity(N3))


def test_power_characterization(upto3):
    for S in upto3:
        for sigma in enumerate_congruences(S):
            for n in (1, 2, 3):
                assert tower_entry(S, sigma, n).partition == power_oracle_step(S, sigma.partition, n)


def test_theta_tower_is_shifted_identity_tower(upto3):
    for S in upto3:
        iota = Congruence.identity(S)
        th = Congruence(S, theta(S))
        for n in range(S.order + 2):
            assert tower_entry(S, th, n) == tower_entry(S, iota, n + 1)


def test_phi_exchanges_towers(upto3):
    for S in upto3:
        for sigma in enumerate_congruences(S):
            Q, _ = quotient(S, sigma)
            theta_q = Congruence(Q, theta(Q))
            for n in range(1, S.order + 2):
                assert phi(S, sigma, tower_entry(S, sigma, n)) == tower_entry(Q, theta_q, n - 1)


def test_phi_is_a_lattice_isomorphism(upto3):
    for S in upto3:
        congs = enumerate_congruences(S)
        for alpha in congs:
            Q, _ = quotient(S, alpha)
            above = [b for b in congs if alpha <= b]
            images = [phi(S, alpha, b).partition for b in above]
            assert sorted(p.block_of for p in images) == [c.partition.block_of for c in enumerate_congruences(Q)]
            for b1, i1 in zip(above, images):
                for b2, i2 in zip(above, images):
                    assert (b1 <= b2) == i1.refines(i2)
