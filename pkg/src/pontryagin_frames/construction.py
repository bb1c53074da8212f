"""Frames with a prescribed frame operator and prescribed vector norms.

The feasibility gate is majorization of the squared norms by the spectrum
of the target operator. The constructive step builds a real symmetric
matrix with that spectrum (padded with zeros) and the squared norms on its
diagonal, using a chain of plane rotations, and factors it.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InvalidDimensionError, NotMajorizedError, NotPositiveDefiniteError
from .frames import VectorFamily, frame_operator, hilbert_frame_operator

PARTIAL_TOL = 1e-12
TRACE_TOL = 1e-10
PD_TOL = 1e-12


class Flavor(str, enum.Enum):
    HILBERT = "hilbert"
    PONTRYAGIN = "pontryagin"
    JFAM_PONTRYAGIN = "jfam-pontryagin"
    JFAM_HILBERT = "jfam-hilbert"


def _descending_positive(values, what):
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise InvalidDimensionError(f"{what} must be a non-empty list")
    if not np.all(np.isfinite(v)) or np.any(v <= 0):
        raise InvalidDimensionError(f"{what} must be finite and positive")
    if np.any(np.diff(v) > 0):
        raise InvalidDimensionError(f"{what} must be sorted in descending order")
    return v


@dataclass(frozen=True, eq=False)
class SpectrumSpec:
    eigenvalues: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _descending_positive(self.eigenvalues, "eigenvalues"))

    @property
    def N(self):
        return self.eigenvalues.size


@dataclass(frozen=True, eq=False)
class NormSpec:
    norms: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "norms", _descending_positive(self.norms, "norms"))

    @property
    def k(self):
        return self.norms.size


@dataclass(frozen=True)
class MajorizationReport:
    partial_ok: tuple
    trace_lhs: float
    trace_rhs: float
    trace_balanced: bool
    # the weaker "sum of squared norms <= trace" reading; equality is what
    # an exact frame-operator match requires
    trace_le: bool
    feasible: bool

    def to_dict(self):
        return {
            "partial_ok": list(self.partial_ok),
            "trace_lhs": self.trace_lhs,
            "trace_rhs": self.trace_rhs,
            "trace_balanced": self.trace_balanced,
            "trace_le": self.trace_le,
            "feasible": self.feasible,
        }


def check_majorization(spectrum, norms):
    lam = spectrum.eigenvalues
    sq = norms.norms**2
    N = lam.size
    padded = np.zeros(max(N, sq.size))
    padded[: sq.size] = sq
    lhs = np.cumsum(padded)[:N]
    rhs = np.cumsum(lam)
    trace_lhs, trace_rhs = float(sq.sum()), float(lam.sum())
    scale = max(trace_lhs, trace_rhs)
    partial = tuple(bool(l <= r + PARTIAL_TOL * scale) for l, r in zip(lhs, rhs))
    balanced = abs(trace_lhs - trace_rhs) <= TRACE_TOL * scale
    return MajorizationReport(
        partial_ok=partial,
        trace_lhs=trace_lhs,
        trace_rhs=trace_rhs,
        trace_balanced=bool(balanced),
        trace_le=bool(trace_lhs <= trace_rhs + TRACE_TOL * scale),
        feasible=bool(all(partial) and balanced),
    )


def _majorizes(mu, d):
    a = np.sort(np.asarray(mu, dtype=float))[::-1]
    b = np.sort(np.asarray(d, dtype=float))[::-1]
    scale = max(abs(a).sum(), abs(b).sum(), 1e-300)
    if abs(a.sum() - b.sum()) > TRACE_TOL * scale:
        return False
    return bool(np.all(np.cumsum(b) <= np.cumsum(a) + PARTIAL_TOL * scale))


def _rotate_plane(A, i, j, c, s):
    # A <- G^T A G with G = [[c, s], [-s, c]] in the (i, j) plane
    ai, aj = A[:, i].copy(), A[:, j].copy()
    A[:, i] = c * ai - s * aj
    A[:, j] = s * ai + c * aj
    ri, rj = A[i, :].copy(), A[j, :].copy()
    A[i, :] = c * ri - s * rj
    A[j, :] = s * ri + c * rj


def _schur_horn(mu, d):
    """Return ``(G, W)`` with ``G = W diag(mu) W^T`` and ``diag(G) = d``.

    ``mu`` is taken in the given order (physical index p starts with value
    mu[p]). Each step pins the largest outstanding target ``t`` by rotating
    the two unpinned entries adjacent to ``t`` in sorted order. The unpinned
    principal submatrix stays diagonal throughout, so every rotation sees a
    diagonal 2x2 block.
    """
    mu = np.asarray(mu, dtype=float)
    d = np.asarray(d, dtype=float)
    k = mu.size
    A = np.diag(mu).astype(float)
    R = np.eye(k)
    unpinned = list(range(k))
    perm = np.empty(k, dtype=int)
    targets = sorted(range(k), key=lambda n: (-d[n], n))
    for ti in targets[:-1]:
        t = d[ti]
        unpinned.sort(key=lambda p: (-A[p, p], p))
        vals = [A[p, p] for p in unpinned]
        # exact hit: pin without rotating
        hit = next((m for m, v in enumerate(vals) if v == t), None)
        if hit is not None:
            p = unpinned.pop(hit)
            perm[ti] = p
            continue
        m = next(
            (m for m in range(len(vals) - 1) if vals[m] >= t >= vals[m + 1]),
            None,
        )
        if m is None:
            # rounding left t marginally outside the range; use the extreme pair
            m = 0 if t > vals[0] else len(vals) - 2
        i, j = unpinned[m], unpinned[m + 1]
        x, y = vals[m], vals[m + 1]
        if x == y:
            c, s = 1.0, 0.0
        else:
            c2 = min(max((t - y) / (x - y), 0.0), 1.0)
            c, s = np.sqrt(c2), np.sqrt(1.0 - c2)
        _rotate_plane(A, i, j, c, s)
        G = np.eye(k)
        G[i, i], G[i, j], G[j, i], G[j, j] = c, s, -s, c
        R = R @ G
        A[i, i] = t
        A[j, j] = x + y - t
        unpinned.pop(m)
        perm[ti] = i
    last = targets[-1]
    perm[last] = unpinned[0]
    A[unpinned[0], unpinned[0]] = d[last]
    # A = R^T diag(mu) R, reorder so position n carries target d[n]
    G = A[np.ix_(perm, perm)]
    W = R[:, perm].T
    return G, W


def schur_horn_hermitian(mu, d):
    """Real symmetric matrix with eigenvalues ``mu`` and diagonal ``d``."""
    mu = np.asarray(mu, dtype=float)
    d = np.asarray(d, dtype=float)
    if mu.shape != d.shape or mu.ndim != 1:
        raise InvalidDimensionError("spectrum and diagonal must be lists of equal length")
    if not _majorizes(mu, d):
        raise NotMajorizedError("diagonal is not majorized by the spectrum")
    G, _ = _schur_horn(np.sort(mu)[::-1], d)
    return G.astype(complex)


def _check_positive_definite(S0):
    lam, U = linalg.hermitian_eig(S0)
    if lam[-1] <= PD_TOL * lam[0]:
        raise NotPositiveDefiniteError(
            f"operator is not positive definite (smallest eigenvalue {lam[-1]:.3e})"
        )
    return lam, U


def construct_frame(space, S0, norms, flavor=Flavor.HILBERT):
    """Frame on ``space`` with Hilbert frame operator ``S0`` and norms ``norms``.

    ``flavor`` selects which of the equivalent forms is returned:

    * ``hilbert``: ``{x_n}`` with ``X X^H = S0``
    * ``pontryagin``: same vectors; indefinite frame operator ``S0 J``
    * ``jfam-pontryagin``: ``{J x_n}``; indefinite frame operator ``J S0``
    * ``jfam-hilbert``: ``{J x_n}``; Hilbert frame operator ``J S0 J``
    """
    flavor = Flavor(flavor)
    if not isinstance(norms, NormSpec):
        norms = NormSpec(norms)
    S0 = linalg.as_matrix(S0, "S0")
    if S0.shape != (space.dim, space.dim):
        raise InvalidDimensionError(f"S0 has shape {S0.shape}, space has dim {space.dim}")
    lam, U = _check_positive_definite(S0)
    report = check_majorization(SpectrumSpec(lam), norms)
    if not report.feasible:
        raise NotMajorizedError("squared norms are not majorized by the spectrum of S0", report)
    N, k = lam.size, norms.k
    mu = np.concatenate([lam, np.zeros(k - N)])
    _, W = _schur_horn(mu, norms.norms**2)
    X = U @ (np.sqrt(lam)[:, None] * W.T[:N, :])
    if flavor in (Flavor.JFAM_PONTRYAGIN, Flavor.JFAM_HILBERT):
        X = space.sig[:, None] * X
    return VectorFamily(space, X)


def target_operator(space, S0, flavor):
    """The operator a ``construct_frame`` result of this flavor reproduces."""
    J = space.J
    S0 = linalg.as_matrix(S0)
    return {
        Flavor.HILBERT: S0,
        Flavor.PONTRYAGIN: S0 @ J,
        Flavor.JFAM_PONTRYAGIN: J @ S0,
        Flavor.JFAM_HILBERT: J @ S0 @ J,
    }[Flavor(flavor)]


def flavor_operator(F, flavor):
    """The frame operator of ``F`` in the sense that matches ``flavor``."""
    if Flavor(flavor) in (Flavor.HILBERT, Flavor.JFAM_HILBERT):
        return hilbert_frame_operator(F)
    return frame_operator(F)


def random_feasible(rng, N, k, transfers=None):
    """Random ``(SpectrumSpec, NormSpec)`` pair that passes the majorization gate.

    Squared norms come from Robin Hood transfers (rich to poor, never
    overshooting) applied to the spectrum padded with zeros, so the total
    is preserved and the result stays majorized.
    """
    if k < N:
        raise InvalidDimensionError("need k >= N")
    lam = np.sort(rng.uniform(0.2, 5.0, size=N))[::-1]
    v = np.concatenate([lam, np.zeros(k - N)])
    for _ in range(transfers if transfers is not None else 3 * k if k > 1 else 0):
        i, j = rng.choice(k, size=2, replace=False)
        if v[i] < v[j]:
            i, j = j, i
        v[i], v[j] = v[i] - (delta := rng.uniform(0, 0.5) * (v[i] - v[j])), v[j] + delta
    while np.any(v <= 1e-3 * lam[-1]):
        i, j = int(np.argmax(v)), int(np.argmin(v))
        delta = 0.5 * (v[i] - v[j])
        v[i] -= delta
        v[j] += delta
    sq = np.sort(v)[::-1]
    # keep the trace identical to the spectrum's to the last bit possible
    sq *= lam.sum() / sq.sum()
    return SpectrumSpec(lam), NormSpec(np.sqrt(sq))
