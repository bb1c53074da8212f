"""Coupling two frames, or two frame operators, on a product space."""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .construction import Flavor, _check_positive_definite, construct_frame
from .dilation import Dilation, dilate
from .frames import VectorFamily, require_frame, validate
from .space import PontryaginSpace, hilbert_space, product_space


@dataclass(frozen=True, eq=False)
class Coupling:
    """``z_n = (u_n, v_n)`` on ``big_space = R_K x R_H``.

    ``embed_K`` / ``embed_H`` locate the original spaces K and H inside
    ``big_space``; ``P_K z_n`` equals ``x_n`` placed at ``embed_K``.
    """

    big_space: PontryaginSpace
    coupled_frame: VectorFamily
    P_K: np.ndarray
    P_H: np.ndarray
    embed_K: slice
    embed_H: slice
    dilation_K: Dilation
    dilation_H: Dilation
    padded_K: VectorFamily
    padded_H: VectorFamily

    def bounds(self):
        """Frame bounds of the coupled family (a NotFrame value when it
        does not span ``big_space``)."""
        return validate(self.coupled_frame)


def pad(F, k):
    """Append zero vectors so that ``F`` has ``k`` members."""
    if F.k >= k:
        return F
    zeros = np.zeros((F.space.dim, k - F.k), dtype=complex)
    return VectorFamily(F.space, np.hstack([F.synthesis, zeros]))


def couple_frames(F, G, tol=linalg.TOL_RANK):
    """Couple frames ``F`` on K and ``G`` on H.

    Both families are zero-padded to a common length, dilated separately,
    and paired up on the product of the two dilation spaces. The coupled
    family has only ``k`` members in a space of dimension ``2k``, so it
    spans the graph ``{(T_K c, T_H c)}`` rather than the whole product;
    ``Coupling.bounds()`` reports what it is.
    """
    require_frame(F, tol)
    require_frame(G, tol)
    k = max(F.k, G.k)
    Fp, Gp = pad(F, k), pad(G, k)
    DK, DH = dilate(Fp, tol), dilate(Gp, tol)
    prod = product_space(DK.big_space, DH.big_space)
    Z = np.vstack([DK.big_frame.synthesis, DH.big_frame.synthesis])
    n = prod.space.dim
    P_K = np.zeros((n, n), dtype=complex)
    P_H = np.zeros((n, n), dtype=complex)
    P_K[prod.left, prod.left] = DK.projector
    P_H[prod.right, prod.right] = DH.projector
    off = prod.left.start
    embed_K = slice(off + DK.embedding.start, off + DK.embedding.stop)
    off = prod.right.start
    embed_H = slice(off + DH.embedding.start, off + DH.embedding.stop)
    return Coupling(
        big_space=prod.space,
        coupled_frame=VectorFamily(prod.space, Z),
        P_K=P_K,
        P_H=P_H,
        embed_K=embed_K,
        embed_H=embed_H,
        dilation_K=DK,
        dilation_H=DH,
        padded_K=Fp,
        padded_H=Gp,
    )


def couple_operators(S_K, S_H):
    """Block-diagonal ``S(x, y) = (S_K x, S_H y)``.

    Both inputs must be Hermitian positive definite.
    """
    S_K = linalg.as_matrix(S_K, "S_K")
    S_H = linalg.as_matrix(S_H, "S_H")
    _check_positive_definite(S_K)
    _check_positive_definite(S_H)
    n, m = S_K.shape[0], S_H.shape[0]
    S = np.zeros((n + m, n + m), dtype=complex)
    S[:n, :n] = S_K
    S[n:, n:] = S_H
    return S


def coupled_operator_frame(S_K, S_H, norms, flavor=Flavor.HILBERT, K=None, H=None):
    """Frame on ``K x H`` whose (flavor-specific) frame operator comes from
    ``couple_operators(S_K, S_H)``. Spaces default to all-positive signature."""
    S = couple_operators(S_K, S_H)
    K = K if K is not None else hilbert_space(np.asarray(S_K).shape[0])
    H = H if H is not None else hilbert_space(S.shape[0] - K.dim)
    return construct_frame(product_space(K, H).space, S, norms, flavor)
