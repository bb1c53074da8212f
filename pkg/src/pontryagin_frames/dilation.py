"""Similarity of frames and dilation to a larger Pontryagin space."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg
from .errors import KMismatchError
from .frames import VectorFamily, analysis_matrix, require_frame
from .space import (
    PontryaginSpace,
    j_orthogonal_complement,
    j_orthogonal_projection,
    product_space,
    span,
)

SAME_RANGE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SimilarityResult:
    similar: bool
    intertwiner: Optional[np.ndarray]
    range_dim_F: int
    range_dim_G: int
    range_gap: float


@dataclass(frozen=True, eq=False)
class Dilation:
    big_space: PontryaginSpace
    big_frame: VectorFamily
    projector: np.ndarray
    embedding: slice
    range_projector: np.ndarray
    complement_basis: np.ndarray

    def embed(self, x):
        z = np.zeros(self.big_space.dim, dtype=complex)
        z[self.embedding] = x
        return z

    def restrict(self, z):
        return np.asarray(z)[self.embedding]


def analysis_range(F, tol=linalg.TOL_RANK):
    """Range of the analysis operator, a subspace of ``standard_space(F.k)``."""
    return span(F.coefficient_space, analysis_matrix(F), tol)


def are_similar(F, G, tol=linalg.TOL_RANK):
    """Decide whether ``U x_n = y_n`` for some invertible ``U``.

    Two frames with the same number of vectors are similar exactly when
    their analysis operators have the same range. The intertwiner is
    ``T_G (T_F^[*] T_F)^+ T_F^[*]``.
    """
    if F.k != G.k:
        raise KMismatchError(f"families have {F.k} and {G.k} vectors")
    require_frame(F, tol)
    require_frame(G, tol)
    RF, RG = analysis_range(F, tol), analysis_range(G, tol)
    gap = float(np.linalg.norm(RF.projector() - RG.projector(), 2))
    if RF.dim != RG.dim or gap >= SAME_RANGE_TOL:
        return SimilarityResult(False, None, RF.dim, RG.dim, gap)
    TF_adj = analysis_matrix(F)
    U = G.synthesis @ linalg.pseudo_inverse(TF_adj @ F.synthesis, tol) @ TF_adj
    return SimilarityResult(True, U, RF.dim, RG.dim, gap)


def _normalize_complement(C, sig):
    """Rescale a basis of a nondegenerate subspace of C^k so that its
    indefinite Gram becomes diagonal +-1. Returns ``(basis, signs)``."""
    if C.shape[1] == 0:
        return C, np.zeros(0)
    gram = C.conj().T @ (sig[:, None] * C)
    g, E = linalg.hermitian_eig(gram)
    return (C @ E) / np.sqrt(np.abs(g)), np.sign(g)


def dilate(F, tol=linalg.TOL_RANK):
    """Realize ``F`` as the J-orthogonal projection of a frame ``u_n = x_n + (I - Q) e_n``.

    ``Q`` is the J-orthogonal projection of ``standard_space(k)`` onto the
    analysis range ``R``; the added coordinates describe ``V = R^[perp]`` in a
    basis whose indefinite Gram is diagonal. Raises DegenerateSubspaceError
    if ``R`` is degenerate.
    """
    require_frame(F, tol)
    H = F.space
    coeff = F.coefficient_space
    R = analysis_range(F, tol)
    Q = j_orthogonal_projection(R)
    V = j_orthogonal_complement(R, tol)
    C, signs = _normalize_complement(V.basis, coeff.sig)
    prod = product_space(H, PontryaginSpace(tuple(int(s) for s in signs)))
    comp = np.eye(F.k, dtype=complex) - Q
    # coordinates of v in V: diag(signs) C^H Jt v
    coords = signs[:, None] * (C.conj().T @ (coeff.sig[:, None] * comp))
    big = np.vstack([F.synthesis, coords])
    P = np.zeros((prod.space.dim, prod.space.dim), dtype=complex)
    P[prod.left, prod.left] = np.eye(H.dim)
    big_frame = VectorFamily(prod.space, big)
    require_frame(big_frame, tol)
    return Dilation(
        big_space=prod.space,
        big_frame=big_frame,
        projector=P,
        embedding=prod.left,
        range_projector=Q,
        complement_basis=C,
    )
