"""Finite-dimensional frame machinery: vector frames, operator-valued
frames, and paired operator families with their operator calculus, duals,
reconstruction, and seeded generators."""

from .bigframes import (
    BiGFrameSystem,
    BiGReport,
    DualPair,
    adjoint_identity_check,
    bi_g_frame_operator,
    biframe_report_of_lift,
    canonical_pair,
    classify_bi_g_frame,
    coefficient_identity_check,
    coefficient_identity_terms,
    dual_pair_bessel_check,
    from_vector_biframe,
    lift_to_biframe,
    pairing_sum,
    reconstruct,
    riesz_transfer_check,
    solve_synthesis_coefficients,
    swap,
)
from .errors import (
    ConstraintViolated,
    FrameToolError,
    NotBiGFrame,
    NotHermitian,
    NotInvertibleController,
    NotPositiveDefinite,
    NotSquare,
    SchemaError,
    ShapeMismatch,
)
from .frames import (
    ClassifyReport,
    ControlledSystem,
    FrameBounds,
    VectorFrame,
    canonical_dual,
    check_controlled_duality,
    check_duality,
    classify_biframe,
    classify_controlled,
    classify_frame,
    frame_operator,
    is_riesz_basis,
    synthesis_matrix,
)
from .generators import (
    KINDS,
    GenSpec,
    gen_bi_g_frame,
    gen_g_frame,
    gen_negative,
    random_hermitian_pd,
)
from .gframes import (
    CoefficientSequence,
    GFrameSystem,
    block_inner,
    classify_g_frame,
    g_analysis,
    g_frame_operator,
    g_synthesis,
    induced_vectors,
    is_g_riesz_basis,
    stacked_analysis_matrix,
)
from .kernel import (
    DEFAULT_TOL,
    HermitianEigen,
    adjoint,
    as_matrix,
    as_vector,
    eig_hermitian,
    hermitian_deviation,
    inner,
    operator_norm,
    solve_pd,
)

__version__ = "0.1.0"

__all__ = [
    "BiGFrameSystem",
    "BiGReport",
    "ClassifyReport",
    "CoefficientSequence",
    "ConstraintViolated",
    "ControlledSystem",
    "DEFAULT_TOL",
    "DualPair",
    "FrameBounds",
    "FrameToolError",
    "GFrameSystem",
    "GenSpec",
    "HermitianEigen",
    "KINDS",
    "NotBiGFrame",
    "NotHermitian",
    "NotInvertibleController",
    "NotPositiveDefinite",
    "NotSquare",
    "SchemaError",
    "ShapeMismatch",
    "VectorFrame",
    "adjoint",
    "adjoint_identity_check",
    "as_matrix",
    "as_vector",
    "bi_g_frame_operator",
    "biframe_report_of_lift",
    "block_inner",
    "canonical_dual",
    "canonical_pair",
    "check_controlled_duality",
    "check_duality",
    "classify_bi_g_frame",
    "classify_biframe",
    "classify_controlled",
    "classify_frame",
    "classify_g_frame",
    "coefficient_identity_check",
    "coefficient_identity_terms",
    "dual_pair_bessel_check",
    "eig_hermitian",
    "frame_operator",
    "from_vector_biframe",
    "g_analysis",
    "g_frame_operator",
    "g_synthesis",
    "gen_bi_g_frame",
    "gen_g_frame",
    "gen_negative",
    "hermitian_deviation",
    "induced_vectors",
    "inner",
    "is_g_riesz_basis",
    "is_riesz_basis",
    "lift_to_biframe",
    "operator_norm",
    "pairing_sum",
    "random_hermitian_pd",
    "reconstruct",
    "riesz_transfer_check",
    "solve_pd",
    "solve_synthesis_coefficients",
    "stacked_analysis_matrix",
    "swap",
    "synthesis_matrix",
]
