"""Frames on finite-dimensional Pontryagin spaces."""

from .construction import (
    Flavor,
    MajorizationReport,
    NormSpec,
    SpectrumSpec,
    check_majorization,
    construct_frame,
    schur_horn_hermitian,
)
from .coupling import Coupling, couple_frames, couple_operators, coupled_operator_frame
from .dilation import Dilation, SimilarityResult, analysis_range, are_similar, dilate
from . import errors as _errors
from .errors import *  # noqa: F403
from .frames import (
    FrameBounds,
    NotFrame,
    VectorFamily,
    analyze,
    four_formulations_bounds,
    frame_operator,
    hilbert_frame_operator,
    reconstruct,
    synthesize,
    validate,
)
from .linalg import column_space_basis, hermitian_eig, pseudo_inverse, rank
from .space import (
    PontryaginSpace,
    Subspace,
    hilbert_inner,
    hilbert_space,
    indefinite_inner,
    j_adjoint,
    j_norm,
    j_orthogonal_complement,
    j_orthogonal_projection,
    j_orthonormal_expansion,
    product_space,
    span,
    standard_space,
)

__version__ = "0.1.0"

__all__ = [
    "Flavor",
    "MajorizationReport",
    "NormSpec",
    "SpectrumSpec",
    "check_majorization",
    "construct_frame",
    "schur_horn_hermitian",
    "FrameBounds",
    "NotFrame",
    "VectorFamily",
    "analyze",
    "four_formulations_bounds",
    "frame_operator",
    "hilbert_frame_operator",
    "reconstruct",
    "synthesize",
    "validate",
    "PontryaginSpace",
    "Subspace",
    "hilbert_inner",
    "hilbert_space",
    "indefinite_inner",
    "j_adjoint",
    "j_norm",
    "j_orthogonal_complement",
    "j_orthogonal_projection",
    "j_orthonormal_expansion",
    "product_space",
    "span",
    "standard_space",
    "Coupling",
    "couple_frames",
    "couple_operators",
    "coupled_operator_frame",
    "Dilation",
    "SimilarityResult",
    "analysis_range",
    "are_similar",
    "dilate",
    "column_space_basis",
    "hermitian_eig",
    "pseudo_inverse",
    "rank",
] + _errors.__all__
