"""Positive-definite integral quadratic forms: representation sets,
representation-constrained search, equivalence testing, a curated dataset of
representation-equal form sets, and the pair-of-ternary-forms algebra."""

from .equivalence import (
    canonical_coeffs,
    canonical_form,
    dedup_classes,
    equivalent_over_Z,
    rationally_equivalent_by_det,
)
from .families import (
    FAMILY_NAMES,
    det_cubic_ratio_check,
    family_identity_all_parameters,
    family_pair,
    family_ternary_pairs,
    is_family_instance,
    verify_family_identity,
)
from .forms import (
    FormPair,
    GroupElement,
    IntForm,
    RatForm,
    act,
    coefficient_pairs,
    compose,
    direct_sum,
    evaluate,
    format_form,
    gram_determinant,
    gram_matrix,
    is_eisenstein_reduced,
    is_minkowski_reduced,
    is_positive_definite,
    parse_form,
)
from .pairs import (
    BinaryCubic,
    QuarticPoly,
    anisotropic_over_Q,
    canonical_pair,
    cubic_automorphism_order2,
    cubic_automorphism_order3,
    cubic_structure,
    det_binary_cubic,
    disc_pair,
    generator_char_poly,
    hilbert_product,
    hilbert_symbol,
    pair_fixing_witness_check,
    power_basis_matrix,
    quartic_structure,
    resolvent,
    resolvent_closed_form,
    shift_cubic,
    transform_cubic,
    transition_matrices,
)
from .repsets import (
    RepCompare,
    RepSet,
    SimRepSet,
    box_representations,
    rep_equal_up_to,
    representations_up_to,
    simultaneous_reps,
    value_mask,
    vectors_with_value,
)
from .search import (
    candidate_forms,
    finiteness_guard,
    search_region_driver,
)
from .tables import (
    TableReport,
    TableSet,
    table_dataset,
    verify_table_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
