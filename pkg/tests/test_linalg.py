import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import crandn, random_invertible
from pontryagin_frames import linalg
from pontryagin_frames.errors import NonFiniteError, NotHermitianError


def random_hermitian(rng, n):
    A = crandn(rng, n, n)
    return A + A.conj().T


def test_eig_diagonal():
    w, V = linalg.hermitian_eig(np.diag([3.0, 1.0]))
    np.testing.assert_allclose(w, [3, 1])
    np.testing.assert_allclose(V, np.eye(2))


def test_eig_swap_matrix():
    w, V = linalg.hermitian_eig([[0, 1], [1, 0]])
    np.testing.assert_allclose(w, [1, -1], atol=1e-15)
    # eigenvectors are fixed up to a phase
    assert abs(abs(np.vdot(V[:, 0], [1, 1])) / np.sqrt(2) - 1) < 1e-14
    assert abs(abs(np.vdot(V[:, 1], [1, -1])) / np.sqrt(2) - 1) < 1e-14


def test_eig_random_reconstruction(rng):
    H = random_hermitian(rng, 5)
    w, V = linalg.hermitian_eig(H)
    assert np.linalg.norm(V @ np.diag(w) @ V.conj().T - H) < 1e-12 * np.linalg.norm(H)
    np.testing.assert_allclose(V.conj().T @ V, np.eye(5), atol=1e-13)
    assert np.all(np.diff(w) <= 0)
    # numpy's LAPACK solver as an independent check
    np.testing.assert_allclose(w, np.linalg.eigvalsh(H)[::-1], atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 12), seed=st.integers(0, 2**32 - 1))
def test_eig_residual_property(n, seed):
    H = random_hermitian(np.random.default_rng(seed), n)
    w, V = linalg.hermitian_eig(H)
    nrm = np.linalg.norm(H)
    assert np.linalg.norm(V @ np.diag(w) @ V.conj().T - H) <= linalg.TOL_EIG * nrm
    assert np.linalg.norm(V.conj().T @ V - np.eye(n)) <= linalg.TOL_EIG


def test_eig_positive_definite_has_positive_spectrum(rng):
    for _ in range(20):
        A = crandn(rng, 6, 6)
        w, _ = linalg.hermitian_eig(A.conj().T @ A + 1e-3 * np.eye(6))
        assert np.all(w > 0)


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        linalg.hermitian_eig([[1, 2], [0, 1]])


def test_eig_rejects_nan():
    with pytest.raises(NonFiniteError):
        linalg.hermitian_eig([[np.nan, 0], [0, 1]])


def test_eig_empty():
    w, V = linalg.hermitian_eig(np.zeros((0, 0)))
    assert w.shape == (0,) and V.shape == (0, 0)


@pytest.mark.parametrize(
    "M, expected",
    [
        (np.eye(3), 3),
        (np.zeros((3, 3)), 0),
        (np.array([[1, 1, 0], [0, 0, 1]]), 2),
        (np.zeros((0, 4)), 0),
    ],
)
def test_rank_examples(M, expected):
    assert linalg.rank(M, 1e-10) == expected


def test_rank_invariant_under_invertible_maps(rng):
    for r in range(1, 5):
        M = crandn(rng, 6, r) @ crandn(rng, r, 7)
        A, B = random_invertible(rng, 6), random_invertible(rng, 7)
        assert linalg.rank(M) == r
        assert linalg.rank(A @ M @ B) == r


def test_rank_rejects_bad_tol():
    with pytest.raises(ValueError):
        linalg.rank(np.eye(2), 0.0)


def test_pinv_examples():
    np.testing.assert_allclose(linalg.pseudo_inverse(np.eye(3)), np.eye(3))
    np.testing.assert_allclose(linalg.pseudo_inverse(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))


def test_pinv_full_column_rank_normal_equations(rng):
    M = crandn(rng, 4, 2)
    oracle = np.linalg.solve(M.conj().T @ M, M.conj().T)
    assert np.abs(linalg.pseudo_inverse(M) - oracle).max() < 1e-10


@pytest.mark.parametrize("shape, r", [((5, 3), 2), ((3, 5), 3), ((4, 4), 1), ((6, 6), 6)])
def test_pinv_penrose_conditions(rng, shape, r):
    M = crandn(rng, shape[0], r) @ crandn(rng, r, shape[1])
    P = linalg.pseudo_inverse(M)
    tol = 1e-10 * max(1.0, np.linalg.norm(M) * np.linalg.norm(P))
    assert np.abs(M @ P @ M - M).max() < tol * np.linalg.norm(M)
    assert np.abs(P @ M @ P - P).max() < tol * np.linalg.norm(P)
    assert np.abs((M @ P).conj().T - M @ P).max() < tol
    assert np.abs((P @ M).conj().T - P @ M).max() < tol


def test_pinv_of_invertible_is_inverse(rng):
    M = random_invertible(rng, 5)
    inv = np.linalg.inv(M)
    assert np.linalg.norm(linalg.pseudo_inverse(M) - inv) < 1e-10 * np.linalg.norm(inv)


def test_column_space_examples():
    B = linalg.column_space_basis(np.eye(2))
    assert B.shape == (2, 2)
    np.testing.assert_allclose(B.conj().T @ B, np.eye(2), atol=1e-15)
    assert linalg.column_space_basis(np.zeros((3, 3))).shape == (3, 0)
    b = linalg.column_space_basis(np.array([[1, 2], [1, 2]]))
    assert b.shape == (2, 1)
    assert abs(abs(np.vdot(b[:, 0], [1, 1])) - np.sqrt(2)) < 1e-14


def test_column_space_spans_range(rng):
    M = crandn(rng, 6, 3) @ crandn(rng, 3, 8)
    B = linalg.column_space_basis(M)
    assert B.shape == (6, 3)
    np.testing.assert_allclose(B.conj().T @ B, np.eye(3), atol=1e-13)
    # every column of M lies in span(B)
    assert np.abs(M - B @ (B.conj().T @ M)).max() < 1e-12 * np.abs(M).max()


def test_null_space_and_complement(rng):
    M = crandn(rng, 2, 5)
    Nb = linalg.null_space_basis(M)
    assert Nb.shape == (5, 3)
    assert np.abs(M @ Nb).max() < 1e-13
    C = linalg.orthogonal_complement_basis(crandn(rng, 5, 2))
    assert C.shape == (5, 3)


def test_svd_matches_numpy(rng):
    for shape in [(7, 3), (3, 7), (5, 5)]:
        M = crandn(rng, *shape)
        U, s, Vh = linalg.svd(M)
        np.testing.assert_allclose(s, np.linalg.svd(M, compute_uv=False), atol=1e-13)
        assert np.abs(U @ np.diag(s) @ Vh - M).max() < 1e-13
