"""Finite semigroups: the kernel of the right regular representation,
congruence towers, quotient correspondences, and the exact probability that
a random pair of elements is related."""
from .congruences import (
    Congruence,
    Ideal,
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
    tower_entry,
)
from .constructions import (
    Construct2Spec,
    Construct3Spec,
    FiberedSystem,
    build_a_k,
    build_a_mk,
    build_construct1,
    build_construct2,
    build_construct3,
    build_fibered,
    fibers_refine_theta,
    predicted_p_theta_family,
)
from .core import ElementSet, FiniteSemigroup, from_table, idempotents, power_set, product
from .enumeration import (
    EnumerationReport,
    are_isomorphic,
    brute_theta,
    count_semigroups,
    enumerate_semigroups,
    find_isomorphism,
    verify_theorem,
)
from .kernels import BACKEND
from .relations import (
    Partition,
    Rational,
    class_sizes,
    commuting_probability,
    probability_of_partition,
    probability_of_relation,
)
from .rightrep import (
    RightMatrix,
    TranslationMap,
    is_left_reductive,
    matrix_product,
    p_theta,
    rho,
    right_matrix,
    theta,
)
from .structure import (
    LeftZeroByNullDecomposition,
    decompose_left_zero_by_null,
    is_ideal_extension_left_zero_by_nilpotent,
    is_left_cancellative,
    is_left_zero,
    is_nilpotent,
    is_null,
    is_right_zero,
    zero_element,
)

__version__ = "0.1.0"
