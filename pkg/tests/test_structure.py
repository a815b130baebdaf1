from canon import C2, LZ2, N2, N3, ONE, RZ2
from semiprob import (
    Congruence,
    decompose_left_zero_by_null,
    enumerate_congruences,
    is_ideal_extension_left_zero_by_nilpotent,
    is_left_cancellative,
    is_left_zero,
    is_nilpotent,
    is_null,
    is_right_zero,
    p_theta,
    quotient,
    sigma_step,
    sigma_tower,
    zero_element,
)
from semiprob.core import from_table
from semiprob.structure import nilpotency_index

LZN = from_table(3, [[0, 0, 0], [1, 1, 1], [0, 0, 0]])


def test_left_cancellative():
    assert is_left_cancellative(RZ2)
    assert is_left_cancellative(C2)
    assert not is_left_cancellative(N2)


def test_left_right_zero():
    assert is_left_zero(LZ2) and not is_right_zero(LZ2)
    assert is_right_zero(RZ2) and not is_left_zero(RZ2)
    assert is_left_zero(ONE) and is_right_zero(ONE)


def test_null():
    assert is_null(N2)
    assert not is_null(N3)
    assert not is_null(LZ2)


def test_zero_element():
    assert zero_element(N3) == 0
    assert zero_element(LZ2) is None
    assert zero_element(ONE) == 0


def test_nilpotent():
    assert is_nilpotent(N3) and nilpotency_index(N3) == 3
    assert is_nilpotent(N2) and nilpotency_index(N2) == 2
    assert not is_nilpotent(RZ2) and nilpotency_index(RZ2) is None
    assert not is_nilpotent(C2)


def test_decompose_examples():
    dec = decompose_left_zero_by_null(LZN)
    assert dec.idempotent_ideal == {0, 1}
    assert dec.phi_map == (0, 1, 0)
    assert dec.rebuild() == LZN
    dec = decompose_left_zero_by_null(N2)
    assert dec.idempotent_ideal == {0} and dec.phi_map == (0, 0)
    assert decompose_left_zero_by_null(N3) is None


def test_decompose_invariants(upto4):
    for S in upto4:
        dec = decompose_left_zero_by_null(S)
        if dec is None:
            continue
        E = dec.idempotent_ideal
        assert all(S.table[e][f] == e for e in E for f in E)
        assert all(S.table[a][i] in E and S.table[i][a] in E for i in E for a in S.elements)
        assert all(dec.phi_map[e] == e for e in E)
        assert all(S.table[a][b] == dec.phi_map[a] for a in S.elements for b in S.elements)


def test_decompose_with_idempotents_not_first():
    # E = {1, 2}; element 0 maps to 2
    S = from_table(3, [[2, 2, 2], [1, 1, 1], [2, 2, 2]])
    dec = decompose_left_zero_by_null(S)
    assert dec.idempotent_ideal == {1, 2}
    assert dec.to_construct3_spec().phi == (0, 1, 1)
    assert dec.rebuild() == S


def test_ideal_extension_examples():
    assert is_ideal_extension_left_zero_by_nilpotent(N3)
    assert is_ideal_extension_left_zero_by_nilpotent(LZ2)
    assert not is_ideal_extension_left_zero_by_nilpotent(RZ2)


def test_full_theta_iff_decomposable(upto4):
    for S in upto4:
        assert (p_theta(S) == 1) == (decompose_left_zero_by_null(S) is not None)


def test_tower_reaches_universal_iff_extension(upto4):
    for S in upto4:
        top = sigma_tower(S, Congruence.identity(S))[-1].partition
        assert top.is_universal() == is_ideal_extension_left_zero_by_nilpotent(S)


def test_quotient_versions(upto3):
    for S in upto3:
        for sigma in enumerate_congruences(S):
            Q, _ = quotient(S, sigma)
            one_step = sigma_step(S, sigma).partition.is_universal()
            assert one_step == (decompose_left_zero_by_null(Q) is not None)
            reaches = sigma_tower(S, sigma)[-1].partition.is_universal()
            assert reaches == is_ideal_extension_left_zero_by_nilpotent(Q)


def test_extension_predicate_matches_ideal_search(upto4):
    # The predicate only tries E(A); compare with trying every ideal.
    from semiprob import ideals, rees_quotient
    from semiprob.structure import is_left_zero_subsemigroup

    def by_search(S):
        return any(
            is_left_zero_subsemigroup(S, set(I)) and is_nilpotent(rees_quotient(S, set(I)))
            for I in ideals(S)
        )

    for S in upto4:
        assert is_ideal_extension_left_zero_by_nilpotent(S) == by_search(S)
