import numpy as np
import pytest

from helpers import crandn, j_gram_schmidt, random_frame, random_invertible, random_space
from pontryagin_frames.dilation import analysis_range, are_similar, dilate
from pontryagin_frames.errors import DegenerateSubspaceError, KMismatchError, NotFrameError
from pontryagin_frames.frames import VectorFamily, analysis_matrix, analyze, validate
from pontryagin_frames.space import PontryaginSpace, hilbert_space, j_adjoint, standard_space


def map_frame(F, M, space=None):
    """Image of ``F`` under ``M`` (an invertible map into ``space``)."""
    space = space if space is not None else F.space
    return VectorFamily(space, M @ F.synthesis)


def test_analysis_range_examples():
    R = analysis_range(VectorFamily(standard_space(2), np.eye(2)))
    assert R.dim == 2
    R = analysis_range(VectorFamily(hilbert_space(1), np.array([[1.0, 1.0]])))
    assert R.dim == 1
    # spanned by Jt (1, 1) = (1, -1)
    v = np.array([1.0, -1.0]) / np.sqrt(2)
    assert abs(abs(np.vdot(R.basis[:, 0], v)) - 1) < 1e-14
    assert analysis_range(VectorFamily(standard_space(3), np.zeros((3, 4)))).dim == 0


def test_analysis_range_dim_of_frame(rng):
    for _ in range(10):
        F = random_frame(rng, 3, 6)
        assert analysis_range(F).dim == 3


def test_similar_to_itself(rng):
    F = random_frame(rng, 3, 5)
    res = are_similar(F, F)
    assert res.similar
    np.testing.assert_allclose(res.intertwiner, np.eye(3), atol=1e-11)


def test_similar_scaled(rng):
    F = random_frame(rng, 3, 5)
    res = are_similar(F, map_frame(F, 2 * np.eye(3)))
    assert res.similar
    np.testing.assert_allclose(res.intertwiner, 2 * np.eye(3), atol=1e-11)


def test_similar_k_mismatch_and_different_ranges():
    K = hilbert_space(2)
    basis = VectorFamily(K, np.eye(2))
    F3 = VectorFamily.from_vectors(K, [[1, 0], [1, 1], [0, 1]])
    with pytest.raises(KMismatchError):
        are_similar(basis, F3)
    G3 = VectorFamily.from_vectors(K, [[1, 0], [0, 1], [1, 1]])
    res = are_similar(F3, G3)
    assert not res.similar and res.intertwiner is None
    assert res.range_dim_F == res.range_dim_G == 2


def test_similar_requires_frames():
    K = hilbert_space(2)
    with pytest.raises(NotFrameError):
        are_similar(VectorFamily.from_vectors(K, [[1, 0], [2, 0]]), VectorFamily(K, np.eye(2)))


def test_similar_random_invertible_maps(rng):
    for _ in range(20):
        F = random_frame(rng, 4, 7)
        H = random_space(rng, 4)
        M = random_invertible(rng, 4)
        G = map_frame(F, M, H)
        res = are_similar(F, G)
        assert res.similar
        U = res.intertwiner
        err = np.linalg.norm(U @ F.synthesis - G.synthesis, axis=0).max()
        assert err < 1e-9 * np.linalg.norm(G.synthesis, axis=0).max()
        assert np.abs(U - M).max() < 1e-9 * np.abs(M).max()


def test_similarity_rejects_random_pairs(rng):
    for _ in range(10):
        assert not are_similar(random_frame(rng, 3, 6), random_frame(rng, 3, 6)).similar


def test_similarity_is_equivalence(rng):
    for _ in range(10):
        F = random_frame(rng, 3, 6)
        G = map_frame(F, random_invertible(rng, 3))
        H = map_frame(G, random_invertible(rng, 3))
        assert are_similar(F, F).similar
        fg, gf = are_similar(F, G), are_similar(G, F)
        assert fg.similar and gf.similar
        assert np.abs(fg.intertwiner @ gf.intertwiner - np.eye(3)).max() < 1e-9
        gh, fh = are_similar(G, H), are_similar(F, H)
        assert gh.similar and fh.similar
        assert np.abs(gh.intertwiner @ fg.intertwiner - fh.intertwiner).max() < 1e-8


def test_dilate_orthonormal_basis_is_identity(rng):
    K = random_space(rng, 4)
    E = np.column_stack(j_gram_schmidt(K, list(crandn(rng, 4, 4).T)))
    D = dilate(VectorFamily(K, E))
    assert D.big_space == K
    np.testing.assert_array_equal(D.big_frame.synthesis, E)
    np.testing.assert_array_equal(D.projector, np.eye(4))


def test_dilate_three_vectors_in_plane():
    K = hilbert_space(2)
    F = VectorFamily.from_vectors(K, [[1, 0], [1, 1], [0, 1]])
    D = dilate(F)
    assert D.big_space.dim == 3 and D.complement_basis.shape[1] == 1
    U = D.big_frame.synthesis
    assert np.abs(D.projector @ U - np.vstack([F.synthesis, np.zeros((1, 3))])).max() < 1e-12
    assert validate(D.big_frame).is_frame


def test_dilate_padded_basis():
    K = standard_space(2)
    F = VectorFamily.from_vectors(K, [[1, 0], [0, 1], [0, 0]])
    D = dilate(F)
    assert D.big_space.dim == 3
    u3 = D.big_frame.synthesis[:, 2]
    assert np.abs(D.restrict(D.projector @ u3)).max() < 1e-15
    assert np.abs(u3).max() > 0.5


def test_dilate_degenerate_range():
    # analysis range spanned by the neutral vector (1, -1) in standard_space(2)
    F = VectorFamily(hilbert_space(1), np.array([[1.0, 1.0]]))
    with pytest.raises(DegenerateSubspaceError):
        dilate(F)


def test_dilate_requires_frame():
    with pytest.raises(NotFrameError):
        dilate(VectorFamily.from_vectors(standard_space(2), [[1, 0], [2, 0]]))


def test_dilate_random(rng):
    for _ in range(30):
        N = int(rng.integers(1, 6))
        k = int(rng.integers(N + 1, N + 6))
        F = random_frame(rng, N, k)
        D = dilate(F)
        big = D.big_space
        assert big.dim == k
        U = D.big_frame.synthesis
        P = D.projector
        assert np.abs(P @ U - np.vstack([F.synthesis, np.zeros((k - N, k))])).max() < 1e-12
        assert np.abs(P @ P - P).max() == 0
        assert np.abs(j_adjoint(big, big, P) - P).max() == 0
        b = validate(D.big_frame)
        assert b.is_frame and b.lower > 0


def test_range_projector_properties(rng):
    for _ in range(20):
        F = random_frame(rng, 3, 6)
        D = dilate(F)
        Q = D.range_projector
        C = F.coefficient_space
        assert np.abs(Q @ Q - Q).max() < 1e-10
        assert np.abs(j_adjoint(C, C, Q) - Q).max() < 1e-10
        a = analyze(F, crandn(rng, 3))
        assert np.linalg.norm(Q @ a - a) < 1e-10 * np.linalg.norm(a)
        assert np.abs(Q @ analysis_matrix(F) - analysis_matrix(F)).max() < 1e-10


def test_dilated_signature_matches_complement(rng):
    # inertia of the range plus inertia of the added coordinates is that of C^k
    F = random_frame(rng, 3, 7, space=PontryaginSpace((1, 1, -1)))
    D = dilate(F)
    g = np.linalg.eigvalsh(analysis_range(F).gram())
    extra = np.array(D.big_space.signature[3:])
    C = F.coefficient_space
    assert np.sum(g > 0) + np.sum(extra > 0) == C.p
    assert np.sum(g < 0) + np.sum(extra < 0) == C.q


def test_dilate_structured_constructed_frame_is_degenerate():
    from pontryagin_frames.construction import construct_frame

    # rows (0, 1, 1) and (1, 0, 0): Jt (0, 1, 1) = (0, -1, 1) is neutral in C^3
    F = construct_frame(standard_space(2), np.diag([2.0, 1.0]), [1, 1, 1])
    with pytest.raises(DegenerateSubspaceError):
        dilate(F)
