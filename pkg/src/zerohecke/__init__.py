"""
Exact orthogonal idempotent decompositions of the algebra of anti-sorting
operators on permutations, indexed by signed Dynkin diagrams.
"""

from .algebra import (
    AlgebraElement,
    NotDemipotentError,
    add,
    basis_element,
    dynkin_reverse,
    element,
    embed,
    embed_top,
    from_json_dict,
    from_word,
    gen_pi,
    gen_pibar,
    is_idempotent,
    lambda_eval,
    multiply,
    one,
    phi_minus,
    phi_plus,
    power_to_fixpoint,
    psi,
    scale,
    to_json_dict,
    w_minus,
    w_plus,
    zero,
)
from .diagrams import (
    BranchSumViolationError,
    all_diagrams,
    blocks,
    branch_children,
    degree_bound,
    demipotent,
    idempotent,
    is_universal,
    masked_element,
    masked_word_idempotents,
    nilpotence_degree,
    opposite_demipotent,
    prefix_product_idempotent,
    universal_word,
)
from .analysis import (
    CoefficientScan,
    DiagramRecord,
    VerificationReport,
    coefficient_scan,
    descent_class,
    lambda_character_table,
    matrix_rank,
    norton_ideal_dimension,
    radical_dimension,
    rank_of_idempotent,
    trace_left,
    trace_right,
    verify_orthogonal_decomposition,
)
from .ndpf import (
    catalan,
    check_quotient_relations,
    masked_ndpf_element,
    ndpf_compose,
    ndpf_enumerate,
    ndpf_generator,
    ndpf_idempotents,
    ndpf_masked_word_check,
)
from .permutations import (
    apply_pi_left,
    apply_pi_right,
    content,
    inversions,
    left_descents,
    leq_left_weak,
    longest_element,
    monoid_omega,
    monoid_product,
    reduced_word,
    right_descents,
    word_to_permutation,
)
from .suites import SUITE_NAMES, SuiteResult, run_suite, run_suites

__version__ = "0.1.0"
