"""Exact factorial Grothendieck polynomials and machine-verified identities."""

from .poly import (
    DegreeOverflowError,
    MAX_TOTAL_DEGREE,
    NotDivisibleError,
    Polynomial,
    RationalPoint,
    UniverseMismatchError,
    VariableUniverse,
    determinant,
    exact_div,
    from_json_obj,
    poly_prod,
    poly_sum,
    random_rational_point,
)
from .tableaux import (
    InvalidPartitionError,
    InvalidTableauError,
    Partition,
    SetValuedTableau,
    count_tableaux,
    enumerate_ssyt,
    enumerate_tableaux,
    partitions_in_box,
    validate_tableau,
    weight,
)
from .grothendieck import (
    EmbeddingError,
    GrassmannianPermutation,
    InvalidShapeError,
    default_universe,
    factorial_schur,
    g_determinant,
    g_divided_difference,
    g_tableau,
    grassmannian_from_partition,
    pi_operator,
    restrict,
    schur,
)
from .identities import (
    IDENTITY_TAGS,
    IdentityReport,
    PreconditionViolatedError,
    SubsetTerm,
    clear_denominator_fnr,
    clear_denominator_gm,
    cross_product,
    e_beta,
    fast_check,
    fnr_cleared_term,
    gm_cleared_term,
    run_case,
    run_suite,
    subset_terms,
    suite_cases,
    verify_classical,
    verify_e_beta_recurrence,
    verify_fnr_type,
    verify_gm_type,
    verify_good_general,
    verify_good_k_general,
    verify_louck_general,
    verify_vandermonde_lemma,
)

__version__ = "0.1.0"
