"""Dense complex linear algebra kernel.

Everything here is built on one 2x2 complex Jacobi rotation: the two-sided
cyclic Jacobi method for Hermitian eigenproblems and the one-sided
(Hestenes) Jacobi method for singular values. Sweeps use round-robin
ordering so that each round of disjoint rotations is one vectorized step.

Empty matrices are legal input and produce empty results.
"""

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    NonFiniteError,
    NotHermitianError,
)

TOL_HERM = 1e-10
TOL_EIG = 1e-11
TOL_RANK = 1e-10
_OFF_TOL = 1e-13
# off-diagonal entries below this fraction of ||A||_F are dropped, not rotated
_NEGLIGIBLE = 1e-20
_MAX_SWEEPS = 80


def as_matrix(M, name="matrix"):
    """Return ``M`` as a 2-D complex128 array, rejecting NaN/Inf."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2:
        raise DimensionMismatchError(f"{name}: expected a 2-D array, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NonFiniteError(f"{name}: entries must be finite")
    return A


def as_vector(x, name="vector"):
    v = np.asarray(x, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatchError(f"{name}: expected a 1-D array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteError(f"{name}: entries must be finite")
    return v


def rotations(a, d, b, skip):
    """Jacobi rotations for the Hermitian blocks ``[[a, b], [conj(b), d]]``.

    Vectorized over arrays of blocks. Returns ``(c, s, phase)`` such that
    ``R = [[c, s*phase], [-s*conj(phase), c]]`` diagonalizes each block via
    ``R^H H R``. Blocks where ``skip`` is true get the identity.
    """
    r = np.abs(b)
    live = ~skip & (r > 0)
    r_safe = np.where(live, r, 1.0)
    phase = np.where(live, b / r_safe, 1.0)
    tau = (d - a) / (2.0 * r_safe)
    root = np.hypot(1.0, tau)
    t = np.copysign(1.0, tau) / (np.abs(tau) + root)
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    return np.where(live, c, 1.0), np.where(live, s, 0.0), phase


def rotation(a, d, b):
    """Scalar form of :func:`rotations`."""
    c, s, phase = rotations(
        np.array([a], float), np.array([d], float), np.array([b], complex), np.array([False])
    )
    return float(c[0]), float(s[0]), complex(phase[0])


def _round_robin(n):
    """Rounds of disjoint index pairs covering every pair once (tournament order)."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if max(p, q) < n]
        if pairs:
            rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _rotate_columns(A, P, Q, c, s, phase):
    ap = A[:, P]
    aq = A[:, Q]
    A[:, P] = c * ap - (s * phase.conjugate()) * aq
    A[:, Q] = (s * phase) * ap + c * aq


def _rotate_rows(A, P, Q, c, s, phase):
    c, s, phase = c[:, None], s[:, None], phase[:, None]
    rp = A[P, :]
    rq = A[Q, :]
    A[P, :] = c * rp - (s * phase) * rq
    A[Q, :] = (s * phase.conjugate()) * rp + c * rq


def hermitian_eig(M, tol_herm=TOL_HERM):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Returns ``(w, V)`` with ``w`` real and sorted descending and ``V``
    unitary, so that ``M = V @ diag(w) @ V^H``.

    Raises NotHermitianError when ``||M - M^H||_F > tol_herm * ||M||_F``.
    """
    A = as_matrix(M)
    n, m = A.shape
    if n != m:
        raise DimensionMismatchError(f"hermitian_eig needs a square matrix, got {A.shape}")
    if n == 0:
        return np.zeros(0), np.zeros((0, 0), dtype=complex)
    norm = np.linalg.norm(A)
    if np.linalg.norm(A - A.conj().T) > tol_herm * norm:
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    V = np.eye(n, dtype=complex)
    if norm == 0.0:
        return np.zeros(n), V

    A = 0.5 * (A + A.conj().T)
    target = _OFF_TOL * norm
    negligible = _NEGLIGIBLE * norm
    rounds = _round_robin(n)
    for _ in range(_MAX_SWEEPS):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off < target:
            break
        # each round rotates disjoint planes, so they can be applied together
        for P, Q in rounds:
            b = A[P, Q]
            skip = np.abs(b) <= negligible
            c, s, phase = rotations(A[P, P].real, A[Q, Q].real, b, skip)
            _rotate_columns(A, P, Q, c, s, phase)
            _rotate_rows(A, P, Q, c, s, phase)
            A[P, Q] = 0.0
            A[Q, P] = 0.0
            _rotate_columns(V, P, Q, c, s, phase)
    else:
        raise ConvergenceError("Jacobi eigensolver did not converge")

    w = np.diag(A).real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


def _one_sided(M):
    """Hestenes Jacobi: returns ``(W, V)`` with ``W = M V`` having
    mutually orthogonal columns and ``V`` unitary (n x n)."""
    W = np.array(M, dtype=complex)
    n = W.shape[1]
    V = np.eye(n, dtype=complex)
    eps = 4 * np.finfo(float).eps
    norms = np.einsum("ij,ij->j", W.conj(), W).real
    # columns below this squared norm are numerically zero
    floor = (np.finfo(float).eps ** 2) * (norms.max() if n else 0.0)
    rounds = _round_robin(n)
    for _ in range(_MAX_SWEEPS):
        rotated = False
        for P, Q in rounds:
            alpha, beta = norms[P], norms[Q]
            gamma = np.einsum("ij,ij->j", W[:, P].conj(), W[:, Q])
            skip = (alpha <= floor) | (beta <= floor) | (np.abs(gamma) <= eps * np.sqrt(alpha * beta))
            if skip.all():
                continue
            rotated = True
            c, s, phase = rotations(alpha, beta, gamma, skip)
            _rotate_columns(W, P, Q, c, s, phase)
            _rotate_columns(V, P, Q, c, s, phase)
            norms[P] = np.einsum("ij,ij->j", W[:, P].conj(), W[:, P]).real
            norms[Q] = np.einsum("ij,ij->j", W[:, Q].conj(), W[:, Q]).real
        if not rotated:
            return W, V
    raise ConvergenceError("one-sided Jacobi SVD did not converge")


def svd(M):
    """Thin singular value decomposition ``M = U @ diag(s) @ Vh``.

    ``s`` is sorted descending and has ``min(m, n)`` entries. Columns of
    ``U`` belonging to zero singular values are completed to an
    orthonormal set.
    """
    A = as_matrix(M)
    m, n = A.shape
    if m < n:
        U, s, Vh = svd(A.conj().T)
        return Vh.conj().T, s, U.conj().T
    if n == 0:
        return np.zeros((m, 0), dtype=complex), np.zeros(0), np.zeros((0, 0), dtype=complex)
    W, V = _one_sided(A)
    s = np.linalg.norm(W, axis=0)
    order = np.argsort(-s, kind="stable")
    s, W, V = s[order], W[:, order], V[:, order]
    U = np.zeros((m, n), dtype=complex)
    smax = s[0]
    for j in range(n):
        if s[j] > np.finfo(float).eps * smax * n and s[j] > 0:
            U[:, j] = W[:, j] / s[j]
        else:
            U[:, j] = _complete_column(U[:, :j], m)
    return U, s, V.conj().T


def _complete_column(Q, m):
    # unit vector orthogonal to the columns of Q, taken from the coordinate axes
    best, best_norm = None, -1.0
    for i in range(m):
        e = np.zeros(m, dtype=complex)
        e[i] = 1.0
        r = e - Q @ (Q.conj().T @ e)
        r = r - Q @ (Q.conj().T @ r)
        nr = np.linalg.norm(r)
        if nr > best_norm:
            best, best_norm = r, nr
    return best / best_norm


def singular_values(M):
    return svd(M)[1]


def _threshold(s, tol):
    if tol <= 0:
        raise ValueError("tol must be positive")
    if s.size == 0 or s[0] == 0.0:
        return None
    return tol * s[0]


def rank(M, tol=TOL_RANK):
    """Number of singular values above ``tol * sigma_max``."""
    s = singular_values(M)
    cut = _threshold(s, tol)
    if cut is None:
        return 0
    return int(np.count_nonzero(s > cut))


def pseudo_inverse(M, tol=TOL_RANK):
    """Moore-Penrose inverse, discarding singular values below ``tol * sigma_max``."""
    A = as_matrix(M)
    U, s, Vh = svd(A)
    cut = _threshold(s, tol)
    if cut is None:
        return np.zeros((A.shape[1], A.shape[0]), dtype=complex)
    r = int(np.count_nonzero(s > cut))
    return (Vh[:r].conj().T / s[:r]) @ U[:, :r].conj().T


def column_space_basis(M, tol=TOL_RANK):
    """Orthonormal basis (as columns) of the range of ``M``."""
    A = as_matrix(M)
    U, s, _ = svd(A)
    cut = _threshold(s, tol)
    if cut is None:
        return np.zeros((A.shape[0], 0), dtype=complex)
    return U[:, : int(np.count_nonzero(s > cut))]


def null_space_basis(M, tol=TOL_RANK):
    """Orthonormal basis (as columns) of the kernel of ``M``."""
    A = as_matrix(M)
    m, n = A.shape
    if n == 0:
        return np.zeros((0, 0), dtype=complex)
    if m == 0:
        return np.eye(n, dtype=complex)
    W, V = _one_sided(A)
    s = np.linalg.norm(W, axis=0)
    smax = s.max()
    if smax == 0.0:
        return V
    return V[:, s <= tol * smax]


def orthogonal_complement_basis(B, tol=TOL_RANK):
    """Orthonormal basis of the Hilbert orthogonal complement of ``range(B)``."""
    B = as_matrix(B)
    if B.shape[1] == 0:
        return np.eye(B.shape[0], dtype=complex)
    return null_space_basis(B.conj().T, tol)


def hilbert_projector(B):
    """Orthogonal projector onto the span of the orthonormal columns of ``B``."""
    return B @ B.conj().T
