"""Exact engine for twisted q-deformed Fock spaces.

Computes the canonical basis of the vacuum component over the ring of
integer Laurent polynomials, the associated colored crystal graphs, and the
q = 1 reduction onto self-associate spin characters, including conjectural
reduced decomposition matrices in odd characteristic.
"""

from .laurent import (
    LaurentPoly,
    ExactDivisionError,
    q_integer,
    q_factorial,
    symmetrize_tail,
)
from .partitions import (
    enumerate_dp,
    enumerate_dp_h,
    enumerate_dpr_h,
    residue,
    residue_content,
    ladders,
    hbar_core,
    dominance_leq,
    shift_by_multiple,
    a_h,
    b_exponent,
)
from .fock import (
    FockVector,
    UncoveredDisorderError,
    MixedWeightError,
    normal_order,
    apply_f,
    apply_e,
    apply_t,
    apply_t_inv,
    apply_f_divided,
    weight,
    norm_squared,
)
from .crystal import (
    CrystalGraph,
    ftilde,
    etilde,
    eps,
    phi,
    component,
    highest_weight_vertices,
)
from .canonical import (
    BasisMatrix,
    CanonicalBasis,
    CanonicalBasisError,
    a_vector,
    a_vector_fast,
    canonical_basis,
    check_basis_matrix,
)
from .modular import (
    ReducedMatrix,
    character_image,
    strip_two_power,
    reduced_matrix,
    parse_external_csv,
    reduce_external_matrix,
    count_consistency_report,
    independence_report,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "ExactDivisionError", "q_integer", "q_factorial",
    "symmetrize_tail",
    "enumerate_dp", "enumerate_dp_h", "enumerate_dpr_h", "residue",
    "residue_content", "ladders", "hbar_core", "dominance_leq",
    "shift_by_multiple", "a_h", "b_exponent",
    "FockVector", "UncoveredDisorderError", "MixedWeightError",
    "normal_order", "apply_f", "apply_e", "apply_t", "apply_t_inv",
    "apply_f_divided", "weight", "norm_squared",
    "CrystalGraph", "ftilde", "etilde", "eps", "phi", "component",
    "highest_weight_vertices",
    "BasisMatrix", "CanonicalBasis", "CanonicalBasisError", "a_vector",
    "a_vector_fast", "canonical_basis", "check_basis_matrix",
    "ReducedMatrix", "character_image", "strip_two_power", "reduced_matrix",
    "parse_external_csv", "reduce_external_matrix",
    "count_consistency_report", "independence_report",
    "__version__",
]
