"""Finite families of vectors as candidate frames.

For a family ``x_1..x_k`` in a space K with synthesis matrix ``X`` (column
n is ``x_n``) the coefficient space is ``standard_space(k)`` with symmetry
``Jt``. Then

* synthesis ``T a = X a``
* analysis ``T^[*] x = Jt X^H J x``, whose n-th entry is ``(-1)^(n-1) [x, x_n]``
* frame operator ``S = T Jt T^[*] = X X^H J``, i.e. ``S x = sum [x, x_n] x_n``
* Hilbert frame operator ``S_J = X X^H``, so ``S = S_J J``.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatchError,
    InvalidDimensionError,
    NotFrameError,
    SingularFrameOperatorError,
)
from .space import PontryaginSpace, standard_space

TIGHT_TOL = 1e-9
MAX_CONDITION = 1e12


@dataclass(frozen=True, eq=False)
class VectorFamily:
    space: PontryaginSpace
    synthesis: np.ndarray

    def __post_init__(self):
        X = linalg.as_matrix(self.synthesis, "synthesis")
        if X.shape[0] != self.space.dim:
            raise DimensionMismatchError(f"vectors have length {X.shape[0]}, space has dim {self.space.dim}")
        if X.shape[1] < 1:
            raise InvalidDimensionError("a family needs at least one vector")
        X = X.copy()
        X.flags.writeable = False
        object.__setattr__(self, "synthesis", X)

    @classmethod
    def from_vectors(cls, space, vectors):
        return cls(space, np.column_stack([np.asarray(v, dtype=complex) for v in vectors]))

    @property
    def k(self):
        return self.synthesis.shape[1]

    @property
    def coefficient_space(self):
        return standard_space(self.k)

    @property
    def vectors(self):
        return [self.synthesis[:, n] for n in range(self.k)]

    def j_image(self):
        """The family ``{J x_n}``."""
        return VectorFamily(self.space, self.space.sig[:, None] * self.synthesis)

    def norms(self):
        return np.linalg.norm(self.synthesis, axis=0)


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float
    tight: bool
    exact: bool
    rank: int

    is_frame = True


@dataclass(frozen=True)
class NotFrame:
    rank: int
    dim: int

    is_frame = False


def synthesize(F, alpha):
    a = linalg.as_vector(alpha, "alpha")
    if a.shape[0] != F.k:
        raise DimensionMismatchError(f"need {F.k} coefficients, got {a.shape[0]}")
    return F.synthesis @ a


def analysis_matrix(F):
    """Matrix of ``T^[*]``: ``Jt X^H J`` (k x dim)."""
    return F.coefficient_space.sig[:, None] * F.synthesis.conj().T * F.space.sig[None, :]


def analyze(F, x):
    x = F.space.check_vector(x, "x")
    return analysis_matrix(F) @ x


def hilbert_frame_operator(F):
    X = F.synthesis
    return X @ X.conj().T


def frame_operator(F):
    return hilbert_frame_operator(F) * F.space.sig[None, :]


def validate(F, tol=linalg.TOL_RANK) -> Union[FrameBounds, NotFrame]:
    """Optimal frame bounds, or a NotFrame value when the family does not span.

    The optimal bounds are the extreme eigenvalues of ``X X^H``; they are the
    same for the indefinite and the Hilbert formulation.
    """
    r = linalg.rank(F.synthesis, tol)
    if r < F.space.dim:
        return NotFrame(rank=r, dim=F.space.dim)
    w, _ = linalg.hermitian_eig(hilbert_frame_operator(F))
    A, B = float(w[-1]), float(w[0])
    return FrameBounds(
        lower=A,
        upper=B,
        tight=abs(B - A) <= TIGHT_TOL * B,
        exact=F.k == F.space.dim,
        rank=r,
    )


def require_frame(F, tol=linalg.TOL_RANK):
    result = validate(F, tol)
    if not result.is_frame:
        raise NotFrameError(f"family spans only {result.rank} of {result.dim} dimensions", rank=result.rank)
    return result


def _bounds_of_form(form, k, dim):
    w, _ = linalg.hermitian_eig(form)
    A, B = float(w[-1]), float(w[0])
    return FrameBounds(A, B, abs(B - A) <= TIGHT_TOL * B, k == dim, dim)


def four_formulations_bounds(F, tol=linalg.TOL_RANK):
    """Optimal bounds of the four equivalent frame formulations.

    Returned in the order: ``{x_n}`` in the indefinite space, ``{J x_n}`` in
    the indefinite space, ``{x_n}`` in the Hilbert space, ``{J x_n}`` in the
    Hilbert space. Each comes from the Hermitian matrix ``M`` with
    ``sum_n |<coefficient>_n|^2 = x^H M x``, whose extreme eigenvalues are
    the optimal constants because ``||x||_J^2 = x^H x``.
    """
    require_frame(F, tol)
    sig = F.space.sig[:, None]
    X = F.synthesis
    JX = sig * X
    forms = []
    for Y, indefinite in ((X, True), (JX, True), (X, False), (JX, False)):
        # [y_n, x] = (J y_n)^T conj(x); (y_n, x) = y_n^T conj(x)
        G = sig * Y if indefinite else Y
        forms.append(G @ G.conj().T)
    return tuple(_bounds_of_form(M, F.k, F.space.dim) for M in forms)


def analysis_energy(F, x):
    """``sum_n |[x_n, x]|^2``, the middle term of the frame inequality."""
    x = F.space.check_vector(x, "x")
    brackets = F.synthesis.T @ (F.space.sig * x.conj())
    return float(np.sum(np.abs(brackets) ** 2))


def reconstruct(F, x, tol=linalg.TOL_RANK):
    """Rebuild ``x`` from its analysis coefficients via the canonical dual."""
    require_frame(F, tol)
    x = F.space.check_vector(x, "x")
    w, V = linalg.hermitian_eig(hilbert_frame_operator(F))
    if w[-1] <= 0 or w[0] / w[-1] > MAX_CONDITION:
        raise SingularFrameOperatorError("frame operator condition number exceeds 1e12")
    # S = S_J J  =>  S^{-1} = J S_J^{-1}
    y = F.space.sig * ((V / w) @ (V.conj().T @ x))
    c = F.coefficient_space.sig * analyze(F, y)
    return synthesize(F, c)
