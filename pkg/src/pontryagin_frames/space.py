"""Finite-dimensional Pontryagin spaces with a diagonal fundamental symmetry.

A space is C^n together with a signature ``(s_1, ..., s_n)``, ``s_i = +-1``.
The indefinite product is ``[x, y] = sum_i s_i x_i conj(y_i)`` and the
associated Hilbert product is the ordinary one, ``(x, y) = [Jx, y]``.
Products are linear in the first argument.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DegenerateSubspaceError,
    DimensionMismatchError,
    InvalidDimensionError,
    NotJOrthonormalError,
)

GRAM_TOL = 1e-10


@dataclass(frozen=True)
class PontryaginSpace:
    signature: tuple
    strict_pontryagin: bool = field(default=False, compare=False)

    def __post_init__(self):
        sig = tuple(int(s) for s in self.signature)
        if any(s not in (1, -1) for s in sig):
            raise InvalidDimensionError("signature entries must be +1 or -1")
        object.__setattr__(self, "signature", sig)
        if self.strict_pontryagin and (self.p == 0 or self.q == 0):
            raise InvalidDimensionError(
                "a strict Pontryagin space needs both positive and negative directions"
            )

    @property
    def dim(self):
        return len(self.signature)

    @property
    def p(self):
        return sum(1 for s in self.signature if s > 0)

    @property
    def q(self):
        return self.dim - self.p

    @property
    def aleph(self):
        """min(p, q), the rank of indefiniteness."""
        return min(self.p, self.q)

    @property
    def J(self):
        return np.diag(np.array(self.signature, dtype=float)).astype(complex)

    @property
    def sig(self):
        return np.array(self.signature, dtype=float)

    def check_vector(self, x, name="vector"):
        v = linalg.as_vector(x, name)
        if v.shape[0] != self.dim:
            raise DimensionMismatchError(f"{name} has length {v.shape[0]}, space has dim {self.dim}")
        return v

    def __repr__(self):
        return f"PontryaginSpace(signature={self.signature})"


def standard_space(k):
    """C^k with the alternating signature (+1, -1, +1, ...)."""
    if k < 1:
        raise InvalidDimensionError("standard space needs k >= 1")
    return PontryaginSpace(tuple(1 if n % 2 == 0 else -1 for n in range(k)))


def hilbert_space(n):
    """C^n with an all-positive signature (J = I)."""
    return PontryaginSpace((1,) * n)


def indefinite_inner(space, x, y):
    x = space.check_vector(x, "x")
    y = space.check_vector(y, "y")
    return complex(np.sum(space.sig * x * y.conj()))


def hilbert_inner(space, x, y):
    x = space.check_vector(x, "x")
    y = space.check_vector(y, "y")
    return complex(np.vdot(y, x))


def j_norm(space, x):
    x = space.check_vector(x, "x")
    return float(np.linalg.norm(x))


def j_adjoint(domain, codomain, M):
    """Adjoint of ``M: domain -> codomain`` w.r.t. the indefinite products.

    Equals ``J_domain M^H J_codomain`` and satisfies
    ``[M x, y]_codomain = [x, j_adjoint(M) y]_domain``.
    """
    M = linalg.as_matrix(M)
    if M.shape != (codomain.dim, domain.dim):
        raise DimensionMismatchError(
            f"operator shape {M.shape} does not map dim {domain.dim} -> dim {codomain.dim}"
        )
    return domain.sig[:, None] * M.conj().T * codomain.sig[None, :]


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of ``ambient`` spanned by the orthonormal columns of ``basis``."""

    ambient: PontryaginSpace
    basis: np.ndarray

    @property
    def dim(self):
        return self.basis.shape[1]

    def gram(self):
        """Indefinite Gram matrix ``B^H J B`` (Hermitian)."""
        B = self.basis
        return B.conj().T @ (self.ambient.sig[:, None] * B)

    def projector(self):
        """Hilbert-orthogonal projector onto the subspace."""
        return linalg.hilbert_projector(self.basis)

    def same_span(self, other, tol=1e-10):
        if self.dim != other.dim:
            return False
        return np.linalg.norm(self.projector() - other.projector(), 2) < tol


def span(space, vectors, tol=linalg.TOL_RANK):
    """Subspace spanned by the columns of ``vectors``."""
    M = linalg.as_matrix(vectors)
    if M.shape[0] != space.dim:
        raise DimensionMismatchError("vectors do not live in this space")
    return Subspace(space, linalg.column_space_basis(M, tol))


def j_orthogonal_complement(V, tol=linalg.TOL_RANK):
    """``V^[perp] = J V^perp``, the J-orthogonal complement."""
    perp = linalg.orthogonal_complement_basis(V.basis, tol)
    return Subspace(V.ambient, V.ambient.sig[:, None] * perp)


def _inverse_gram(V):
    G = V.gram()
    if G.shape[0] == 0:
        return G
    g, E = linalg.hermitian_eig(G)
    # basis columns are orthonormal and J is unitary, so |g| <= 1 is the scale
    if np.abs(g).min() < GRAM_TOL:
        raise DegenerateSubspaceError("subspace is degenerate: its indefinite Gram matrix is singular")
    return (E / g) @ E.conj().T


def j_orthogonal_projection(V):
    """The J-orthogonal projection ``Q = B G^{-1} B^H J`` onto ``V``.

    Raises DegenerateSubspaceError if ``V`` contains a neutral direction
    that is J-orthogonal to all of ``V``.
    """
    B = V.basis
    Ginv = _inverse_gram(V)
    return (B @ Ginv @ B.conj().T) * V.ambient.sig[None, :]


def is_degenerate(V):
    try:
        _inverse_gram(V)
    except DegenerateSubspaceError:
        return True
    return False


def j_orthonormal_expansion(space, basis_vectors, x, tol=1e-10):
    """Coefficients ``c_n = [e_n, e_n] [x, e_n]`` with ``x = sum c_n e_n``."""
    E = basis_vectors
    if isinstance(E, (list, tuple)):
        E = np.column_stack([np.asarray(e, dtype=complex) for e in E]) if E else np.zeros((space.dim, 0))
    E = linalg.as_matrix(E, "basis_vectors")
    if E.shape != (space.dim, space.dim):
        raise NotJOrthonormalError(
            f"need {space.dim} basis vectors of length {space.dim}, got shape {E.shape}"
        )
    x = space.check_vector(x, "x")
    # G[i, j] = [e_i, e_j]
    G = E.T @ (space.sig[:, None] * E.conj())
    d = np.diag(G).real
    if np.any(np.abs(np.abs(d) - 1.0) > tol) or np.linalg.norm(G - np.diag(np.diag(G))) > tol:
        raise NotJOrthonormalError("vectors are not J-orthonormal")
    signs = np.sign(d)
    brackets = E.conj().T @ (space.sig * x)  # [x, e_n]
    return signs * brackets


@dataclass(frozen=True)
class ProductSpace:
    """``K x H`` with ``[(x, y), (a, b)] = [x, a]_K + [y, b]_H``."""

    space: PontryaginSpace
    left: slice
    right: slice

    def embed(self, x=None, y=None):
        z = np.zeros(self.space.dim, dtype=complex)
        if x is not None:
            z[self.left] = x
        if y is not None:
            z[self.right] = y
        return z

    def embed_left(self, M):
        """Lift the rows of ``M`` (vectors of the left factor as columns)."""
        M = np.asarray(M, dtype=complex)
        out = np.zeros((self.space.dim,) + M.shape[1:], dtype=complex)
        out[self.left] = M
        return out

    def embed_right(self, M):
        M = np.asarray(M, dtype=complex)
        out = np.zeros((self.space.dim,) + M.shape[1:], dtype=complex)
        out[self.right] = M
        return out

    def split(self, z):
        z = np.asarray(z)
        return z[self.left], z[self.right]


def product_space(K, H):
    n = K.dim
    return ProductSpace(
        PontryaginSpace(K.signature + H.signature),
        slice(0, n),
        slice(n, n + H.dim),
    )
