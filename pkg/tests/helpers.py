"""Random instance generators shared by the test modules."""

import numpy as np

from pontryagin_frames.frames import VectorFamily
from pontryagin_frames.space import PontryaginSpace


def crandn(rng, *shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_space(rng, dim):
    return PontryaginSpace(tuple(int(s) for s in rng.choice([1, -1], size=dim)))


def random_frame(rng, dim, k, space=None):
    """Random frame (full row rank synthesis with probability one)."""
    space = space if space is not None else random_space(rng, dim)
    return VectorFamily(space, crandn(rng, dim, k))


def random_invertible(rng, n):
    while True:
        M = crandn(rng, n, n)
        if np.linalg.cond(M) < 1e3:
            return M


def random_unitary(rng, n):
    Q, R = np.linalg.qr(crandn(rng, n, n))
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_pd(rng, eigenvalues):
    U = random_unitary(rng, len(eigenvalues))
    return (U * np.asarray(eigenvalues)) @ U.conj().T


def j_gram_schmidt(space, vectors):
    """J-orthonormalize vectors with non-neutral partial Gram pivots."""
    sig = space.sig
    out = []
    for v in vectors:
        w = np.array(v, dtype=complex)
        for e in out:
            ee = np.sum(sig * e * e.conj()).real
            w = w - (np.sum(sig * w * e.conj()) / ee) * e
        nrm = np.sum(sig * w * w.conj()).real
        out.append(w / np.sqrt(abs(nrm)))
    return out
